// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wavshrink {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void require_length(std::span<const double> signal) {
  if (signal.size() < 2) throw std::invalid_argument("diffusion needs at least two samples");
}

}  // namespace

Diffusivity shrink_to_diffusivity(ShrinkFunction delta, double lambda, std::string name) {
  const double s0 = 1e-12 * lambda;
  // delta(x) <= x makes g nonnegative; the clamp absorbs rounding.
  const double g0 = std::max(0.0, 1.0 - (kSqrt2 / s0) * delta(s0 / kSqrt2));
  auto eval = [delta = std::move(delta), g0](double s) {
    if (s == 0.0) return g0;
    return std::max(0.0, 1.0 - (kSqrt2 / s) * delta(s / kSqrt2));
  };
  return Diffusivity{std::move(name), lambda, std::move(eval)};
}

Diffusivity shrink_to_diffusivity(const ShrinkageRule& rule) {
  return shrink_to_diffusivity(rule.as_function(), rule.lambda(),
                               std::string(kind_name(rule.kind())));
}

ShrinkFunction diffusivity_to_shrink(const Diffusivity& g) {
  return [g](double x) {
    const double ax = std::abs(x);
    return x * (1.0 - g.evaluate(kSqrt2 * ax));
  };
}

Diffusivity constant_diffusivity(double value) {
  return Diffusivity{"constant", value, [value](double) { return value; }};
}

Diffusivity charbonnier_diffusivity(double lambda) {
  return Diffusivity{"charbonnier", lambda, [lambda](double s) {
                       return 1.0 / std::sqrt(1.0 + (s * s) / (lambda * lambda));
                     }};
}

Diffusivity perona_malik_diffusivity(double lambda) {
  return Diffusivity{"perona_malik", lambda,
                     [lambda](double s) { return 1.0 / (1.0 + (s * s) / (lambda * lambda)); }};
}

Diffusivity weickert_diffusivity(double lambda) {
  return Diffusivity{"weickert", lambda, [lambda](double s) {
                       if (s == 0.0) return 0.0;
                       const double r2 = (lambda / s) * (lambda / s);
                       const double r4 = r2 * r2;
                       return 1.0 - std::exp(-kWeickertDiffusivityConstant * (r4 * r4));
                     }};
}

Diffusivity tukey_diffusivity(double lambda) {
  return Diffusivity{"tukey", lambda, [lambda](double s) {
                       if (s > lambda) return 0.0;
                       const double u = 1.0 - (s / lambda) * (s / lambda);
                       return u * u;
                     }};
}

Diffusivity closed_form_diffusivity(const ShrinkageRule& rule) {
  const double lam = rule.lambda();
  const std::string name(kind_name(rule.kind()));
  switch (rule.kind()) {
    case ShrinkKind::kLinear:
      return Diffusivity{name, lam, [lam](double) { return lam / (1.0 + lam); }};
    case ShrinkKind::kSoft:
      return Diffusivity{name, lam, [lam](double s) {
                           if (s == 0.0) return 1.0;
                           return 1.0 - std::max(0.0, s - kSqrt2 * lam) / s;
                         }};
    case ShrinkKind::kHard:
      return Diffusivity{name, lam, [lam](double s) { return s <= kSqrt2 * lam ? 1.0 : 0.0; }};
    case ShrinkKind::kGarrote:
      return Diffusivity{name, lam, [lam](double s) {
                           return s <= kSqrt2 * lam ? 1.0 : 2.0 * lam * lam / (s * s);
                         }};
    case ShrinkKind::kFirm: {
      const double l2 = rule.lambda2();
      return Diffusivity{name, lam, [lam, l2](double s) {
                           if (s <= kSqrt2 * lam) return 1.0;
                           if (s <= kSqrt2 * l2) return lam / (l2 - lam) * (kSqrt2 * l2 / s - 1.0);
                           return 0.0;
                         }};
    }
    case ShrinkKind::kScad: {
      const double a = rule.a();
      return Diffusivity{name, lam, [lam, a](double s) {
                           if (s <= kSqrt2 * lam) return 1.0;
                           if (s <= 2.0 * kSqrt2 * lam) return kSqrt2 * lam / s;
                           if (s <= a * kSqrt2 * lam) {
                             return a * kSqrt2 * lam / ((a - 2.0) * s) - 1.0 / (a - 2.0);
                           }
                           return 0.0;
                         }};
    }
    case ShrinkKind::kCharbonnier:
      return charbonnier_diffusivity(lam);
    case ShrinkKind::kPeronaMalik:
      return perona_malik_diffusivity(lam);
    case ShrinkKind::kWeickert:
      return weickert_diffusivity(lam);
    case ShrinkKind::kTukey:
      return tukey_diffusivity(lam);
  }
  throw std::logic_error("unhandled shrinkage kind");
}

std::vector<double> diffusion_step(std::span<const double> signal, const Diffusivity& g,
                                   double dt) {
  require_length(signal);
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const std::size_t n = signal.size();
  // flux[k] lives on the edge between samples k and k+1; the reflected end
  // edges carry zero flux.
  std::vector<double> flux(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double diff = signal[k + 1] - signal[k];
    flux[k] = diff * g(diff);
  }
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double right = k + 1 < n ? flux[k] : 0.0;
    const double left = k > 0 ? flux[k - 1] : 0.0;
    out[k] = signal[k] + dt * (right - left);
  }
  return out;
}

std::vector<double> haar_shift_shrink_step(std::span<const double> signal,
                                           const ShrinkFunction& delta) {
  require_length(signal);
  const std::size_t n = signal.size();
  const double corr = 1.0 / (2.0 * kSqrt2);
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = k > 0 ? signal[k - 1] : signal[0];
    const double next = k + 1 < n ? signal[k + 1] : signal[n - 1];
    const double fk = signal[k];
    out[k] = 0.25 * (prev + 2.0 * fk + next) +
             corr * (-delta((next - fk) / kSqrt2) + delta((fk - prev) / kSqrt2));
  }
  return out;
}

}  // namespace wavshrink
