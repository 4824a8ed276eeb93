// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavshrink {

/// Scalar map applied coefficient-wise by a denoiser.
using ShrinkFunction = std::function<double(double)>;

enum class ShrinkKind {
  kHard,
  kSoft,
  kFirm,
  kGarrote,
  kScad,
  kLinear,
  kCharbonnier,
  kPeronaMalik,
  kWeickert,
  kTukey,
};

inline constexpr std::array<ShrinkKind, 10> kAllShrinkKinds = {
    ShrinkKind::kHard,        ShrinkKind::kSoft,        ShrinkKind::kFirm,
    ShrinkKind::kGarrote,     ShrinkKind::kScad,        ShrinkKind::kLinear,
    ShrinkKind::kCharbonnier, ShrinkKind::kPeronaMalik, ShrinkKind::kWeickert,
    ShrinkKind::kTukey,
};

inline constexpr double kScadDefaultA = 3.7;

/// Weickert's diffusivity constant. The shrinker exponent is this value over
/// 16, so both forms share one source.
inline constexpr double kWeickertDiffusivityConstant = 3.31488;
inline constexpr double kWeickertShrinkConstant = kWeickertDiffusivityConstant / 16.0;

[[nodiscard]] std::string_view kind_name(ShrinkKind kind) noexcept;
[[nodiscard]] std::optional<ShrinkKind> parse_kind(std::string_view name) noexcept;

/// A thresholding or shrinkage rule with validated parameters.
///
/// `lambda` is the threshold (for firm, the lower threshold lambda1; for the
/// linear rule, the smoothing parameter of x / (1 + lambda)). Only firm uses
/// `lambda2` and only scad uses `a`.
class ShrinkageRule {
 public:
  static ShrinkageRule hard(double lambda);
  static ShrinkageRule soft(double lambda);
  static ShrinkageRule firm(double lambda1, double lambda2);
  static ShrinkageRule garrote(double lambda);
  static ShrinkageRule scad(double lambda, double a = kScadDefaultA);
  static ShrinkageRule linear(double lambda);
  static ShrinkageRule charbonnier(double lambda);
  static ShrinkageRule perona_malik(double lambda);
  static ShrinkageRule weickert(double lambda);
  static ShrinkageRule tukey(double lambda);

  /// Generic factory. `lambda2` defaults to 2 * lambda for firm; `a` to 3.7.
  static ShrinkageRule make(ShrinkKind kind, double lambda,
                            std::optional<double> lambda2 = std::nullopt,
                            std::optional<double> a = std::nullopt);

  [[nodiscard]] ShrinkKind kind() const noexcept { return kind_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double lambda2() const noexcept { return lambda2_; }
  [[nodiscard]] double a() const noexcept { return a_; }

  /// delta_lambda(x). Total, odd, and sign/magnitude preserving.
  [[nodiscard]] double apply(double x) const noexcept;
  [[nodiscard]] double operator()(double x) const noexcept { return apply(x); }

  /// Same rule rescaled so that its threshold equals `threshold`; firm keeps
  /// its lambda2/lambda1 ratio, scad keeps `a`. Requires threshold > 0.
  [[nodiscard]] ShrinkageRule with_threshold(double threshold) const;

  /// Nonnegative points where delta (or its inverse) is not smooth:
  /// hard {lambda}, firm {lambda1, lambda2}, scad {lambda, 2 lambda, a lambda},
  /// tukey {lambda / sqrt 2}, soft and garrote {lambda}; empty otherwise.
  [[nodiscard]] std::vector<double> kinks() const;

  /// Largest scale parameter of the rule (lambda2 for firm, a*lambda for scad).
  [[nodiscard]] double scale() const noexcept;

  /// Rule string in CLI form, e.g. "firm:1,2".
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] ShrinkFunction as_function() const;

 private:
  ShrinkageRule(ShrinkKind kind, double lambda, double lambda2, double a);

  ShrinkKind kind_;
  double lambda_;
  double lambda2_;
  double a_;
};

[[nodiscard]] inline double apply(const ShrinkageRule& rule, double x) noexcept {
  return rule.apply(x);
}

/// Parses "kind[:param[,param]]", e.g. "soft:1.0", "firm:1.0,2.0",
/// "scad:1.0,3.7". A missing parameter list means lambda = 1.
[[nodiscard]] ShrinkageRule parse_rule(std::string_view spec);

struct LimitingCasesReport {
  std::size_t grid_points = 0;
  double max_dev_from_hard = 0.0;
  double hard_tolerance = 0.0;
  double max_dev_from_soft = 0.0;
  double soft_tolerance = 0.0;
  [[nodiscard]] bool passed() const noexcept {
    return max_dev_from_hard <= hard_tolerance && max_dev_from_soft <= soft_tolerance;
  }
};

/// Sweeps `grid_points` equispaced x in [-x_max, x_max] and compares
/// firm(lambda, lambda + hard_gap) with hard(lambda) away from the shrink band
/// lambda < |x| <= lambda + hard_gap, and firm(lambda, soft_lambda2) with
/// soft(lambda) everywhere. Tolerances are hard_gap and
/// 2 * x_max * lambda / (soft_lambda2 - lambda) respectively.
[[nodiscard]] LimitingCasesReport limiting_cases_check(double lambda = 1.0,
                                                       double hard_gap = 1e-9,
                                                       double soft_lambda2 = 1e9,
                                                       double x_max = 10.0,
                                                       std::size_t grid_points = 4001);

}  // namespace wavshrink
