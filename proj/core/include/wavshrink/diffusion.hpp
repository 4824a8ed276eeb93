// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wavshrink/shrink.hpp"

namespace wavshrink {

/// Gradient-dependent diffusion speed g(|s|) of a 1-D nonlinear diffusion filter.
struct Diffusivity {
  std::string name;
  double lambda = 1.0;
  std::function<double(double)> evaluate;  // argument is |s| >= 0

  [[nodiscard]] double operator()(double s) const { return evaluate(s < 0.0 ? -s : s); }
};

/// Diffusivity induced by a shrinker for an explicit step of size 1/4:
///
///     g(|s|) = 1 - (sqrt 2 / |s|) * delta(|s| / sqrt 2).
///
/// At s = 0 the expression is 0/0; g(0) is the value at |s| = 1e-12 * lambda.
[[nodiscard]] Diffusivity shrink_to_diffusivity(const ShrinkageRule& rule);
[[nodiscard]] Diffusivity shrink_to_diffusivity(ShrinkFunction delta, double lambda,
                                                std::string name);

/// Shrinker induced by a diffusivity: delta(x) = x * (1 - g(sqrt 2 * |x|)).
[[nodiscard]] ShrinkFunction diffusivity_to_shrink(const Diffusivity& g);

/// The closed-form diffusivity associated with each catalog rule (stabilized
/// TV for soft, indicator for hard, BFB-type for garrote, piecewise for firm
/// and scad, the constant lambda / (1 + lambda) for linear, and the classical
/// Charbonnier, Perona-Malik, Weickert and Tukey diffusivities).
[[nodiscard]] Diffusivity closed_form_diffusivity(const ShrinkageRule& rule);

[[nodiscard]] Diffusivity constant_diffusivity(double value);
[[nodiscard]] Diffusivity charbonnier_diffusivity(double lambda);
[[nodiscard]] Diffusivity perona_malik_diffusivity(double lambda);
[[nodiscard]] Diffusivity weickert_diffusivity(double lambda);
[[nodiscard]] Diffusivity tukey_diffusivity(double lambda);

/// One explicit Euler step of u_t = (u_x g(|u_x|))_x with unit spacing and
/// reflecting ends (f[-1] = f[0], f[n] = f[n-1]). Requires n >= 2, dt > 0.
[[nodiscard]] std::vector<double> diffusion_step(std::span<const double> signal,
                                                 const Diffusivity& g, double dt);

/// Single-level shift-invariant Haar shrinkage with the same reflecting ends:
///
///     u_k = (f_{k-1} + 2 f_k + f_{k+1}) / 4
///           + (delta((f_k - f_{k-1}) / sqrt 2) - delta((f_{k+1} - f_k) / sqrt 2)) / (2 sqrt 2)
[[nodiscard]] std::vector<double> haar_shift_shrink_step(std::span<const double> signal,
                                                         const ShrinkFunction& delta);

}  // namespace wavshrink
