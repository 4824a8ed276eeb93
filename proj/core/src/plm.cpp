// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/plm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadrature.hpp"
#include "wavshrink/dwt.hpp"

namespace wavshrink {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct LeastSquares {
  VectorXd solution;
  bool rank_deficient = false;
};

// Minimum-norm solution of min || diag(sqrt w) (b - M x) ||.
LeastSquares weighted_least_squares(const MatrixXd& m, const VectorXd& b, const VectorXd& w) {
  const VectorXd root = w.cwiseSqrt();
  const MatrixXd weighted = root.asDiagonal() * m;
  Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(weighted);
  LeastSquares out;
  out.solution = cod.solve(root.cwiseProduct(b));
  out.rank_deficient = cod.rank() < m.cols();
  return out;
}

double huber_psi(double r, double lambda) noexcept { return std::clamp(r, -lambda, lambda); }

}  // namespace

void PlmData::validate() const {
  const auto n = static_cast<std::size_t>(y.size());
  if (!is_power_of_two(n) || n < 2) {
    throw LengthError("PLM sample size " + std::to_string(n) + " is not a power of two >= 2");
  }
  if (static_cast<std::size_t>(x.rows()) != n) {
    throw std::invalid_argument("design matrix has " + std::to_string(x.rows()) +
                                " rows, expected " + std::to_string(n));
  }
  if (x.cols() < 1 || static_cast<std::size_t>(x.cols()) >= n) {
    throw std::invalid_argument("PLM needs 1 <= p < n covariates");
  }
}

double huber_loss(double u, double lambda) noexcept {
  const double au = std::abs(u);
  if (au <= lambda) return 0.5 * u * u;
  return lambda * au - 0.5 * lambda * lambda;
}

VectorXd theta_given_beta(const VectorXd& z, const MatrixXd& a, const VectorXd& beta,
                          double lambda, std::size_t i0) {
  const VectorXd residual = z - a * beta;
  VectorXd theta(residual.size());
  for (Eigen::Index i = 0; i < residual.size(); ++i) {
    const double r = residual[i];
    if (static_cast<std::size_t>(i) < i0) {
      theta[i] = r;
    } else {
      const double mag = std::abs(r) - lambda;
      theta[i] = mag > 0.0 ? std::copysign(mag, r) : 0.0;
    }
  }
  return theta;
}

double plm_objective(const VectorXd& z, const MatrixXd& a, const VectorXd& beta,
                     const VectorXd& theta, double lambda, std::size_t i0) {
  const VectorXd residual = z - a * beta - theta;
  double penalty = 0.0;
  for (Eigen::Index i = static_cast<Eigen::Index>(i0); i < theta.size(); ++i) {
    penalty += std::abs(theta[i]);
  }
  return 0.5 * residual.squaredNorm() + lambda * penalty;
}

double huber_objective(const VectorXd& z, const MatrixXd& a, const VectorXd& beta, double lambda,
                       std::size_t i0) {
  const VectorXd residual = z - a * beta;
  double total = 0.0;
  for (Eigen::Index i = static_cast<Eigen::Index>(i0); i < residual.size(); ++i) {
    total += huber_loss(residual[i], lambda);
  }
  return total;
}

HuberResult huber_regression(const VectorXd& z, const MatrixXd& a, double lambda, std::size_t i0,
                             const HuberOptions& options) {
  if (!(lambda > 0.0)) throw std::invalid_argument("Huber threshold must be positive");
  const Eigen::Index n = z.size();
  const auto first = static_cast<Eigen::Index>(i0);
  if (a.rows() != n) throw std::invalid_argument("design and response sizes differ");
  if (first >= n) throw std::invalid_argument("no penalized coefficients (i0 >= n)");

  auto objective = [&](const VectorXd& beta) { return huber_objective(z, a, beta, lambda, i0); };

  VectorXd unit_weights = VectorXd::Zero(n);
  unit_weights.tail(n - first).setOnes();
  auto start = weighted_least_squares(a, z, unit_weights);

  HuberResult result;
  result.beta = start.solution;
  result.rank_deficient = start.rank_deficient;

  double current = objective(result.beta);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const VectorXd residual = z - a * result.beta;
    VectorXd psi = VectorXd::Zero(n);
    VectorXd weights = VectorXd::Zero(n);
    VectorXd inliers = VectorXd::Zero(n);
    for (Eigen::Index i = first; i < n; ++i) {
      const double r = residual[i];
      psi[i] = huber_psi(r, lambda);
      const double ar = std::abs(r);
      weights[i] = ar <= lambda ? 1.0 : lambda / ar;
      inliers[i] = ar <= lambda ? 1.0 : 0.0;
    }
    const VectorXd descent = a.transpose() * psi;  // minus the gradient
    result.gradient_norm = descent.cwiseAbs().maxCoeff();
    result.iterations = iter;
    if (result.gradient_norm <= options.gradient_tolerance) {
      result.objective = current;
      return result;
    }

    auto irls = weighted_least_squares(a, z, weights);
    VectorXd best = irls.solution;
    bool best_deficient = irls.rank_deficient;
    double best_value = objective(best);

    const MatrixXd hessian = a.transpose() * inliers.asDiagonal() * a;
    Eigen::CompleteOrthogonalDecomposition<MatrixXd> newton(hessian);
    double decrement = std::numeric_limits<double>::infinity();
    if (newton.rank() > 0) {
      const VectorXd step = newton.solve(descent);
      decrement = descent.dot(step);
      const VectorXd candidate = result.beta + step;
      const double value = objective(candidate);
      if (value < best_value) {
        best = candidate;
        best_value = value;
        best_deficient = newton.rank() < a.cols();
      }
    }

    if (best_value < current) {
      result.beta = best;
      result.rank_deficient = result.rank_deficient || best_deficient;
      current = best_value;
      continue;
    }

    const VectorXd direction = best - result.beta;
    bool improved = false;
    for (double step = 0.5; step > 1e-12; step *= 0.5) {
      const VectorXd trial = result.beta + step * direction;
      const double value = objective(trial);
      if (value < current) {
        result.beta = trial;
        current = value;
        improved = true;
        break;
      }
    }
    if (!improved) {
      // No representable descent left: accept when the predicted decrease is
      // below the rounding level of the objective.
      const double floor = 1e4 * std::numeric_limits<double>::epsilon() * std::max(1.0, current);
      if (decrement <= floor) {
        result.objective = current;
        return result;
      }
      throw PlmConvergenceError("Huber regression stalled with gradient norm " +
                                    std::to_string(result.gradient_norm),
                                result.beta);
    }
  }
  throw PlmConvergenceError("Huber regression did not converge in " +
                                std::to_string(options.max_iterations) + " iterations",
                            result.beta);
}

MatrixXd dwt_columns(const MatrixXd& x, const FilterPair& basis, int coarse_level) {
  MatrixXd out(x.rows(), x.cols());
  std::vector<double> column(static_cast<std::size_t>(x.rows()));
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    for (Eigen::Index r = 0; r < x.rows(); ++r) column[static_cast<std::size_t>(r)] = x(r, c);
    const auto flat = dwt(column, basis, coarse_level).flatten();
    out.col(c) = Eigen::Map<const VectorXd>(flat.data(), x.rows());
  }
  return out;
}

double estimate_sigma_qr(const MatrixXd& a_j, const VectorXd& z_j) {
  const Eigen::Index m = a_j.rows();
  const Eigen::Index p = a_j.cols();
  if (z_j.size() != m) throw std::invalid_argument("design and response sizes differ");
  if (m <= p) throw std::invalid_argument("QR noise estimate needs more rows than columns");

  Eigen::HouseholderQR<MatrixXd> qr(a_j);
  const MatrixXd r = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
  const double column_scale = std::max(1.0, a_j.cwiseAbs().maxCoeff());
  for (Eigen::Index k = 0; k < p; ++k) {
    if (std::abs(r(k, k)) <= 1e-10 * column_scale * std::sqrt(static_cast<double>(m))) {
      throw std::invalid_argument("QR noise estimate: design column " + std::to_string(k) +
                                  " is linearly dependent on the preceding columns");
    }
  }
  const VectorXd rotated = qr.householderQ().transpose() * z_j;
  const VectorXd tail = rotated.tail(m - p);
  return mad_sigma(std::span<const double>(tail.data(), static_cast<std::size_t>(tail.size())));
}

PlmFit fit_plm(const PlmData& data, const FilterPair& basis, int coarse_level,
               const SigmaPolicy& sigma_policy, const ThresholdPolicy& lambda_policy,
               const HuberOptions& options) {
  data.validate();
  const auto n = static_cast<std::size_t>(data.y.size());
  const std::vector<double> y(data.y.data(), data.y.data() + data.y.size());
  const auto z_flat = dwt(y, basis, coarse_level).flatten();
  const VectorXd z = Eigen::Map<const VectorXd>(z_flat.data(), data.y.size());
  const MatrixXd a = dwt_columns(data.x, basis, coarse_level);
  const std::size_t i0 = std::size_t{1} << coarse_level;

  PlmFit fit;
  fit.coarse_level = coarse_level;
  if (const auto* known = std::get_if<KnownSigma>(&sigma_policy)) {
    fit.sigma_hat = known->value;
  } else {
    const auto half = static_cast<Eigen::Index>(n / 2);
    fit.sigma_hat = estimate_sigma_qr(a.bottomRows(half), z.tail(half));
  }
  if (const auto* fixed = std::get_if<FixedThreshold>(&lambda_policy)) {
    fit.lambda = fixed->value;
  } else {
    fit.lambda = universal_threshold(n, fit.sigma_hat);
  }
  if (!(fit.lambda > 0.0)) {
    throw std::invalid_argument("PLM penalty must be positive (estimated noise scale is zero?)");
  }

  const auto huber = huber_regression(z, a, fit.lambda, i0, options);
  fit.beta_hat = huber.beta;
  fit.iterations = huber.iterations;
  fit.rank_deficient = huber.rank_deficient;
  fit.theta_hat = theta_given_beta(z, a, fit.beta_hat, fit.lambda, i0);
  fit.objective = plm_objective(z, a, fit.beta_hat, fit.theta_hat, fit.lambda, i0);

  const std::span<const double> theta(fit.theta_hat.data(), n);
  const auto f = idwt(WaveletDecomposition::from_flat(theta, coarse_level), basis);
  fit.f_hat = Eigen::Map<const VectorXd>(f.data(), data.y.size());
  return fit;
}

std::function<double(double)> rho_from_rule(const ShrinkageRule& rule) {
  std::vector<double> breaks = rule.kinks();
  return [rule, breaks = std::move(breaks)](double u) {
    auto integrand = [&rule](double v) { return v - rule.apply(v); };
    return detail::integrate_piecewise(integrand, 0.0, std::abs(u), breaks);
  };
}

}  // namespace wavshrink
