// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <cstddef>
#include <vector>

#include "wavshrink/shrink.hpp"

namespace wavshrink {

/// r(x) = sup{ z : delta(z) <= x } for x >= 0.
///
/// Closed forms for soft (x + lambda), hard (max(x, lambda)) and linear
/// ((1 + lambda) x); every other rule goes through
/// generalized_inverse_bisect.
[[nodiscard]] double generalized_inverse(const ShrinkageRule& rule, double x);

/// Monotone bisection for sup{ z : delta(z) <= x } on the bracket
/// [x, x + width], widening the bracket by doubling when delta(x + width) <= x.
/// Requires delta nondecreasing with delta(z) <= z on z >= 0. Throws
/// NumericalError when no finite upper bracket is found.
[[nodiscard]] double generalized_inverse_bisect(const ShrinkFunction& delta, double x,
                                                double width, double tolerance = 1e-12);

struct PenaltyOptions {
  /// Table spacing as a fraction of the rule scale.
  double relative_step = 1.0 / 512.0;
  /// Table extent as a multiple of the rule scale.
  double relative_extent = 32.0;
  double tolerance = 1e-11;
};

/// p(theta) = integral_0^theta (r(u) - u) du, the penalty whose penalized
/// least-squares problem min_t (z - t)^2 + 2 p(|t|) is solved by the source
/// shrinker.
///
/// Construction tabulates the cumulative integral on a grid (with the rule's
/// kinks inserted as nodes); operator() adds one adaptive quadrature over the
/// remaining partial cell, so values are exact to quadrature tolerance.
class PenaltyFunction {
 public:
  explicit PenaltyFunction(ShrinkageRule rule, PenaltyOptions options = {});

  /// p(|theta|).
  [[nodiscard]] double operator()(double theta) const;

  /// p'(theta) = r(theta) - theta for theta >= 0.
  [[nodiscard]] double derivative(double theta) const;

  /// Cubic Hermite interpolation of the table; falls back to operator()
  /// beyond the table.
  [[nodiscard]] double interpolate(double theta) const;

  [[nodiscard]] const ShrinkageRule& source_rule() const noexcept { return rule_; }
  [[nodiscard]] double table_extent() const noexcept { return nodes_.back(); }

 private:
  [[nodiscard]] double integrate(double from, double to) const;

  ShrinkageRule rule_;
  PenaltyOptions options_;
  std::vector<double> breaks_;
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

[[nodiscard]] PenaltyFunction penalty_from_rule(const ShrinkageRule& rule,
                                                PenaltyOptions options = {});

/// Brute-force global minimizer of k(t) = (z - t)^2 + 2 p(|t|): scan
/// `grid_points` equispaced t on [-|z| - 1, |z| + 1], then golden-section
/// refinement with exact penalty values on the two cells around the best
/// grid point.
[[nodiscard]] double penalized_ls_minimizer(double z, const PenaltyFunction& penalty,
                                            std::size_t grid_points = 100001);

}  // namespace wavshrink
