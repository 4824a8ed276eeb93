// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/penalty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quadrature.hpp"
#include "wavshrink/errors.hpp"

namespace wavshrink {

double generalized_inverse_bisect(const ShrinkFunction& delta, double x, double width,
                                  double tolerance) {
  if (!(x >= 0.0)) throw std::invalid_argument("generalized inverse needs x >= 0");
  if (!(width > 0.0)) width = 1.0;
  double lo = x;
  double hi = x + width;
  int widenings = 0;
  while (delta(hi) <= x) {
    lo = hi;
    width *= 2.0;
    hi = x + width;
    if (++widenings > 64 || !std::isfinite(hi)) {
      throw NumericalError("generalized inverse: no upper bracket found for x = " +
                           std::to_string(x));
    }
  }
  for (int iter = 0; iter < 200 && hi - lo > tolerance * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (delta(mid) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double generalized_inverse(const ShrinkageRule& rule, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("generalized inverse needs x >= 0");
  switch (rule.kind()) {
    case ShrinkKind::kSoft:
      return x + rule.lambda();
    case ShrinkKind::kHard:
      return std::max(x, rule.lambda());
    case ShrinkKind::kLinear:
      return (1.0 + rule.lambda()) * x;
    default:
      // Near machine precision so quadrature of r(u) - u sees a smooth integrand.
      return generalized_inverse_bisect(
          [&rule](double z) { return rule.apply(z); }, x, rule.scale(),
          4.0 * std::numeric_limits<double>::epsilon());
  }
}

PenaltyFunction::PenaltyFunction(ShrinkageRule rule, PenaltyOptions options)
    : rule_(rule), options_(options) {
  for (double k : rule_.kinks()) {
    breaks_.push_back(k);
    breaks_.push_back(std::abs(rule_.apply(k)));
  }
  std::sort(breaks_.begin(), breaks_.end());

  const double scale = rule_.scale();
  const double step = scale * options_.relative_step;
  const double extent = scale * options_.relative_extent;
  const auto cells = static_cast<std::size_t>(std::ceil(extent / step));
  nodes_.reserve(cells + 1 + breaks_.size());
  for (std::size_t i = 0; i <= cells; ++i) nodes_.push_back(step * static_cast<double>(i));
  for (double b : breaks_) {
    if (b > 0.0 && b < nodes_.back()) nodes_.push_back(b);
  }
  std::sort(nodes_.begin(), nodes_.end());
  const double merge = 1e-9 * step;
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end(),
                           [merge](double a, double b) { return b - a <= merge; }),
               nodes_.end());

  values_.resize(nodes_.size());
  slopes_.resize(nodes_.size());
  values_[0] = 0.0;
  slopes_[0] = derivative(0.0);
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    values_[i] = values_[i - 1] + integrate(nodes_[i - 1], nodes_[i]);
    slopes_[i] = derivative(nodes_[i]);
  }
}

double PenaltyFunction::integrate(double from, double to) const {
  auto integrand = [this](double u) { return generalized_inverse(rule_, u) - u; };
  return detail::integrate_piecewise(integrand, from, to, breaks_, options_.tolerance);
}

double PenaltyFunction::derivative(double theta) const {
  const double t = std::abs(theta);
  return generalized_inverse(rule_, t) - t;
}

double PenaltyFunction::operator()(double theta) const {
  const double t = std::abs(theta);
  if (t >= nodes_.back()) return values_.back() + integrate(nodes_.back(), t);
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  const auto i = static_cast<std::size_t>(std::distance(nodes_.begin(), it)) - 1;
  return values_[i] + integrate(nodes_[i], t);
}

double PenaltyFunction::interpolate(double theta) const {
  const double t = std::abs(theta);
  if (t >= nodes_.back()) return (*this)(t);
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  const auto i = static_cast<std::size_t>(std::distance(nodes_.begin(), it)) - 1;
  const double h = nodes_[i + 1] - nodes_[i];
  const double s = (t - nodes_[i]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  return (2.0 * s3 - 3.0 * s2 + 1.0) * values_[i] + (s3 - 2.0 * s2 + s) * h * slopes_[i] +
         (-2.0 * s3 + 3.0 * s2) * values_[i + 1] + (s3 - s2) * h * slopes_[i + 1];
}

PenaltyFunction penalty_from_rule(const ShrinkageRule& rule, PenaltyOptions options) {
  return PenaltyFunction(rule, options);
}

double penalized_ls_minimizer(double z, const PenaltyFunction& penalty, std::size_t grid_points) {
  grid_points = std::max<std::size_t>(grid_points, 3);
  const double half_width = std::abs(z) + 1.0;
  const double step = 2.0 * half_width / static_cast<double>(grid_points - 1);
  auto grid = [&](std::size_t i) { return -half_width + step * static_cast<double>(i); };

  std::size_t best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double t = grid(i);
    const double value = (z - t) * (z - t) + 2.0 * penalty.interpolate(t);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }

  auto objective = [&](double t) { return (z - t) * (z - t) + 2.0 * penalty(t); };
  // The interpolated scan can misplace the minimum where r(u) - u is singular,
  // so walk downhill on exact values before bracketing.
  double best_exact = objective(grid(best));
  while (best > 0) {
    const double left = objective(grid(best - 1));
    if (!(left < best_exact)) break;
    best_exact = left;
    --best;
  }
  while (best + 1 < grid_points) {
    const double right = objective(grid(best + 1));
    if (!(right < best_exact)) break;
    best_exact = right;
    ++best;
  }
  double lo = grid(best >= 2 ? best - 2 : 0);
  double hi = grid(std::min(best + 2, grid_points - 1));
  const double ratio = std::numbers::phi - 1.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * std::max(1.0, half_width); ++iter) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = objective(x2);
    }
  }
  const double refined = 0.5 * (lo + hi);
  // Keep the exact-valued grid point when refinement lands no lower (flat minima at 0).
  const double grid_best = grid(best);
  return objective(refined) <= objective(grid_best) ? refined : grid_best;
}

}  // namespace wavshrink
