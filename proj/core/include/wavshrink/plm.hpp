// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <cstddef>
#include <functional>

#include <Eigen/Dense>

#include "wavshrink/denoise.hpp"
#include "wavshrink/errors.hpp"
#include "wavshrink/filters.hpp"
#include "wavshrink/shrink.hpp"

namespace wavshrink {

/// y_i = X_i^T beta + f(i / n) + u_i with n = 2^J observations and p < n covariates.
struct PlmData {
  Eigen::VectorXd y;
  Eigen::MatrixXd x;

  void validate() const;
};

struct PlmFit {
  Eigen::VectorXd beta_hat;
  Eigen::VectorXd theta_hat;  // wavelet coefficients of f_hat, flattened
  Eigen::VectorXd f_hat;
  double sigma_hat = 0.0;
  double lambda = 0.0;
  int coarse_level = 0;
  int iterations = 0;
  /// Set when a reweighted system was singular and the minimum-norm solution was used.
  bool rank_deficient = false;
  double objective = 0.0;  // J_n(beta_hat, theta_hat)
};

struct HuberOptions {
  int max_iterations = 200;
  double gradient_tolerance = 1e-10;
};

struct HuberResult {
  Eigen::VectorXd beta;
  int iterations = 0;
  bool rank_deficient = false;
  double objective = 0.0;
  double gradient_norm = 0.0;
};

/// Thrown when the Huber solver exhausts its iterations; carries the last iterate.
class PlmConvergenceError : public NumericalError {
 public:
  PlmConvergenceError(const std::string& what, Eigen::VectorXd last_beta)
      : NumericalError(what), last_beta_(std::move(last_beta)) {}
  [[nodiscard]] const Eigen::VectorXd& last_beta() const noexcept { return last_beta_; }

 private:
  Eigen::VectorXd last_beta_;
};

/// Huber's cost: u^2 / 2 inside [-lambda, lambda], lambda |u| - lambda^2 / 2 outside.
[[nodiscard]] double huber_loss(double u, double lambda) noexcept;

/// Minimizer of J_n(beta, .) for fixed beta: residuals below index i0 are
/// kept, the rest are soft thresholded at lambda.
[[nodiscard]] Eigen::VectorXd theta_given_beta(const Eigen::VectorXd& z, const Eigen::MatrixXd& a,
                                               const Eigen::VectorXd& beta, double lambda,
                                               std::size_t i0);

/// J_n(beta, theta) = sum_i (z_i - A_i beta - theta_i)^2 / 2 + lambda sum_{i >= i0} |theta_i|.
[[nodiscard]] double plm_objective(const Eigen::VectorXd& z, const Eigen::MatrixXd& a,
                                   const Eigen::VectorXd& beta, const Eigen::VectorXd& theta,
                                   double lambda, std::size_t i0);

/// sum_{i >= i0} huber_loss(z_i - A_i beta, lambda).
[[nodiscard]] double huber_objective(const Eigen::VectorXd& z, const Eigen::MatrixXd& a,
                                     const Eigen::VectorXd& beta, double lambda, std::size_t i0);

/// Minimizes huber_objective over beta by iteratively reweighted least
/// squares (weights min(1, lambda / |r_i|)), with a Newton step on the inlier
/// set offered as an alternative candidate each iteration and step halving
/// when neither candidate decreases the objective.
[[nodiscard]] HuberResult huber_regression(const Eigen::VectorXd& z, const Eigen::MatrixXd& a,
                                           double lambda, std::size_t i0,
                                           const HuberOptions& options = {});

/// Transforms every column of x with the same basis and coarse level,
/// returning the flattened coefficient vectors as columns.
[[nodiscard]] Eigen::MatrixXd dwt_columns(const Eigen::MatrixXd& x, const FilterPair& basis,
                                          int coarse_level);

/// Noise scale from the design-free part of the response: QR-decompose a_j,
/// rotate z_j by Q^T and take the MAD of its last m - p entries over 0.6745.
/// Throws std::invalid_argument naming the first linearly dependent column.
[[nodiscard]] double estimate_sigma_qr(const Eigen::MatrixXd& a_j, const Eigen::VectorXd& z_j);

/// Three-step fit: transform, Huber regression for beta, soft thresholding of
/// the residual coefficients for f. MadSigma means estimate_sigma_qr on the
/// finest detail level.
[[nodiscard]] PlmFit fit_plm(const PlmData& data, const FilterPair& basis, int coarse_level,
                             const SigmaPolicy& sigma_policy, const ThresholdPolicy& lambda_policy,
                             const HuberOptions& options = {});

/// rho(u) = integral_0^|u| (v - delta(v)) dv, the M-estimation loss paired
/// with a thresholding rule (Huber's loss for soft thresholding).
[[nodiscard]] std::function<double(double)> rho_from_rule(const ShrinkageRule& rule);

}  // namespace wavshrink
