// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "wavshrink/dwt.hpp"

namespace wavshrink {

/// Root of lambda - ln(lambda) - 3 = 0, the James-Stein block threshold.
inline constexpr double kBlockJsLambda = 4.50524;

enum class BlockScheme { kBlockJs, kNeighBlock, kNeighCoeff };

/// What to do with the coefficients left over when the block length does not
/// divide the level size: re-use the leading coefficients to fill the last
/// block (augmented), or leave them out of the estimate (truncated, which
/// sets them to zero).
enum class TailPolicy { kAugmented, kTruncated };

struct BlockConfig {
  BlockScheme scheme = BlockScheme::kBlockJs;
  /// Block length L for BlockJS, inner block length L0 for NeighBlock.
  /// Unset: floor(ln n) and floor(ln n / 2) respectively. Ignored by NeighCoeff.
  std::optional<std::size_t> block_length;
  /// Unset: 4.50524 for BlockJS/NeighBlock, (2/3) ln n for NeighCoeff.
  std::optional<double> lambda;
  TailPolicy tail = TailPolicy::kAugmented;

  void validate() const;
};

[[nodiscard]] std::string_view scheme_name(BlockScheme scheme) noexcept;
[[nodiscard]] std::optional<BlockScheme> parse_block_scheme(std::string_view name) noexcept;

/// max(0, 1 - lambda * length * sigma^2 / energy); zero for an empty block.
[[nodiscard]] double james_stein_factor(double energy, double lambda, double length,
                                        double sigma) noexcept;

[[nodiscard]] std::size_t default_block_length(std::size_t n);
[[nodiscard]] std::size_t default_neigh_inner_length(std::size_t n);

/// Shrinks one level in place: inner blocks of `inner` coefficients, each
/// scaled by the James-Stein factor of the window that extends it by
/// `extension` coefficients on both sides (circularly). A level shorter than
/// the window is treated as a single block of its own length.
void block_shrink_level(std::span<double> level, std::size_t inner, std::size_t extension,
                        double lambda, double sigma, TailPolicy tail);

/// Nonoverlapping James-Stein block thresholding of every detail level.
[[nodiscard]] WaveletDecomposition block_js(const WaveletDecomposition& decomp, double sigma,
                                            const BlockConfig& config = {});

/// Overlapping block thresholding: inner blocks of L0, windows of
/// L0 + 2 max(1, floor(L0 / 2)).
[[nodiscard]] WaveletDecomposition neigh_block(const WaveletDecomposition& decomp,
                                               double sigma_hat, const BlockConfig& config = {
                                                   BlockScheme::kNeighBlock});

/// NeighBlock with L0 = L1 = 1 and lambda = (2/3) ln n.
[[nodiscard]] WaveletDecomposition neigh_coeff(const WaveletDecomposition& decomp,
                                               double sigma_hat, std::size_t n);

/// Dispatches on config.scheme.
[[nodiscard]] WaveletDecomposition block_shrink(const WaveletDecomposition& decomp,
                                                double sigma, const BlockConfig& config);

}  // namespace wavshrink
