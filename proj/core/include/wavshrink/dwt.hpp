// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wavshrink/filters.hpp"
#include "wavshrink/shrink.hpp"

namespace wavshrink {

/// Periodized orthogonal wavelet coefficients of a signal of length 2^depth.
///
/// `scaling` holds the 2^coarse_level coefficients c_{j0,k}; `details[i]`
/// holds the 2^(coarse_level + i) coefficients d_{j,k} of level
/// j = coarse_level + i, for j = coarse_level .. depth - 1.
struct WaveletDecomposition {
  int coarse_level = 0;
  int depth = 0;
  std::vector<double> scaling;
  std::vector<std::vector<double>> details;

  [[nodiscard]] static WaveletDecomposition zeros(int depth, int coarse_level);

  [[nodiscard]] std::size_t size() const noexcept { return std::size_t{1} << depth; }
  [[nodiscard]] int finest_level() const noexcept { return depth - 1; }

  /// Detail coefficients of level j, coarse_level <= j < depth.
  [[nodiscard]] std::span<double> level(int j);
  [[nodiscard]] std::span<const double> level(int j) const;

  /// The coefficient vector W g: scaling first, then levels coarse to fine.
  [[nodiscard]] std::vector<double> flatten() const;
  [[nodiscard]] static WaveletDecomposition from_flat(std::span<const double> flat,
                                                      int coarse_level);

  /// Throws StructureError unless every array has its dyadic size.
  void validate() const;
};

[[nodiscard]] constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

/// log2(n) for a power of two n; throws LengthError otherwise.
[[nodiscard]] int dyadic_depth(std::size_t n);

/// Forward transform by the filter-and-decimate pyramid with periodic
/// wraparound. Requires a power-of-two length 2^J and 0 <= coarse_level < J.
[[nodiscard]] WaveletDecomposition dwt(std::span<const double> signal, const FilterPair& basis,
                                       int coarse_level);

/// Inverse of dwt; the transform matrix is orthogonal so this is W^T.
[[nodiscard]] std::vector<double> idwt(const WaveletDecomposition& decomp,
                                       const FilterPair& basis);

/// Circular left shift: out[i] = x[(i + shift) mod n]. Negative shifts rotate right.
[[nodiscard]] std::vector<double> rotate(std::span<const double> x, std::ptrdiff_t shift);

/// Applies `rule` to every detail coefficient; scaling coefficients are untouched.
void shrink_details(WaveletDecomposition& decomp, const ShrinkageRule& rule);

using CoefficientOp = std::function<void(WaveletDecomposition&)>;

/// Translation-invariant estimate: the average over all n circular shifts of
/// shift -> dwt -> op -> idwt -> unshift. Shifts are split into contiguous
/// ranges across `threads` workers; the result does not depend on the split
/// beyond roundoff.
[[nodiscard]] std::vector<double> cycle_spin(std::span<const double> signal,
                                             const FilterPair& basis, int coarse_level,
                                             const CoefficientOp& op, unsigned threads = 1);

/// Cycle spinning with `rule` rescaled to `threshold` (a zero threshold
/// leaves every coefficient untouched).
[[nodiscard]] std::vector<double> cycle_spin_denoise(std::span<const double> signal,
                                                     const FilterPair& basis,
                                                     const ShrinkageRule& rule, double threshold,
                                                     int coarse_level, unsigned threads = 1);

}  // namespace wavshrink
