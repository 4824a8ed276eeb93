// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wavshrink::detail {

/// Bisecting Gauss-Kronrod on [a, b]. Stops once the Kronrod-Gauss gap is
/// below `tolerance` times max(1, L1 norm of the piece), so integrands that
/// vanish on a piece terminate instead of chasing rounding noise.
template <typename F>
double integrate_adaptive(F& f, double a, double b, double tolerance, int depth) {
  using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto g = [&f, mid, half](double s) { return f(mid + half * s); };
  double error = 0.0;
  double l1 = 0.0;
  const double value = half * Quad::integrate(g, -1.0, 1.0, 0, tolerance, &error, &l1);
  if (depth == 0 || half * error <= tolerance * std::max(half, half * l1)) return value;
  return integrate_adaptive(f, a, mid, tolerance, depth - 1) +
         integrate_adaptive(f, mid, b, tolerance, depth - 1);
}

/// Integral of f over [a, b], split at every point of `breaks` strictly
/// inside the interval so piecewise-smooth integrands converge without
/// refining around their kinks.
template <typename F>
double integrate_piecewise(F&& f, double a, double b, std::span<const double> breaks,
                           double tolerance = 1e-11) {
  if (a == b) return 0.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  std::vector<double> cuts{lo};
  for (double c : breaks) {
    if (c > lo && c < hi) cuts.push_back(c);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    total += integrate_adaptive(f, cuts[i], cuts[i + 1], tolerance, 12);
  }
  return a <= b ? total : -total;
}

}  // namespace wavshrink::detail
