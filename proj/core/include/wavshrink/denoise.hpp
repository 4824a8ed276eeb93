// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "wavshrink/block.hpp"
#include "wavshrink/dwt.hpp"
#include "wavshrink/filters.hpp"
#include "wavshrink/shrink.hpp"

namespace wavshrink {

struct UniversalThreshold {};
struct FixedThreshold {
  double value = 0.0;
};
using ThresholdPolicy = std::variant<UniversalThreshold, FixedThreshold>;

struct KnownSigma {
  double value = 0.0;
};
/// Median absolute deviation of the finest detail level over 0.6745.
struct MadSigma {};
using SigmaPolicy = std::variant<KnownSigma, MadSigma>;

/// A term-by-term rule (rescaled to the resolved threshold) or a block rule.
using DenoiseMethod = std::variant<ShrinkageRule, BlockConfig>;

struct DenoiseConfig {
  FilterPair basis = haar();
  int coarse_level = 0;
  DenoiseMethod method = ShrinkageRule::soft(1.0);
  ThresholdPolicy threshold = UniversalThreshold{};
  bool translation_invariant = false;
  SigmaPolicy sigma = MadSigma{};
  unsigned threads = 1;

  /// Fixed thresholds must be positive, known sigma nonnegative.
  void validate() const;
};

inline constexpr double kMadGaussianScale = 0.6745;

/// median(|d|) / 0.6745. Throws std::invalid_argument on empty input.
[[nodiscard]] double mad_sigma(std::span<const double> finest_details);

/// sigma * sqrt(2 ln n), n >= 2.
[[nodiscard]] double universal_threshold(std::size_t n, double sigma);

/// Noise scale under config.sigma; the MAD route reads level J-1 of `decomp`.
[[nodiscard]] double resolve_sigma(const WaveletDecomposition& decomp, const DenoiseConfig& config);

/// Transform, shrink every detail coefficient, invert. Scaling coefficients
/// pass through. A resolved threshold (or block noise scale) of zero returns
/// the input unchanged. Under the universal policy the linear rule, whose
/// parameter is a ratio rather than a coefficient size, gets sqrt(2 ln n).
[[nodiscard]] std::vector<double> denoise(std::span<const double> signal,
                                          const DenoiseConfig& config);

/// Level-dependent linear shrinkage d_jk / (1 + lambda 2^(2 j s)).
[[nodiscard]] std::vector<double> linear_shrink_denoise(std::span<const double> signal,
                                                        const FilterPair& basis, double smoothness,
                                                        double lambda, int coarse_level);

}  // namespace wavshrink
