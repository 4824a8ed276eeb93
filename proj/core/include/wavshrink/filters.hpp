// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wavshrink {

/// Quadrature-mirror filter pair of an orthonormal, compactly supported wavelet.
///
/// The high-pass filter is always derived from the low-pass one by the
/// alternating flip
///
///     g[k] = (-1)^(k+1) * h[L-1-k],
///
/// which for Haar gives g = (-1, 1)/sqrt(2). A detail coefficient therefore
/// measures "right sample minus left sample" and is positive on a rising edge.
struct FilterPair {
  std::string name;
  std::vector<double> low_pass;
  std::vector<double> high_pass;
  int vanishing_moments = 1;

  [[nodiscard]] std::size_t length() const noexcept { return low_pass.size(); }

  /// Builds a pair from a scaling filter; throws std::invalid_argument when
  /// the filter is not orthonormal to 1e-12.
  static FilterPair from_scaling_filter(std::string name, std::vector<double> low_pass,
                                        int vanishing_moments);
};

[[nodiscard]] FilterPair haar();

/// Daubechies extremal-phase filter with `vanishing_moments` in [1, 8]
/// (2 * vanishing_moments taps). Order 1 is Haar.
[[nodiscard]] FilterPair daubechies(int vanishing_moments);

/// Looks a filter up by name: "haar", "db1" ... "db8".
[[nodiscard]] FilterPair filter_by_name(std::string_view name);

[[nodiscard]] std::vector<std::string> available_filters();

}  // namespace wavshrink
