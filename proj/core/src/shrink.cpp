// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/shrink.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wavshrink {
namespace {

constexpr std::array<std::string_view, 10> kKindNames = {
    "hard", "soft", "firm", "garrote", "scad", "linear", "charbonnier", "perona_malik",
    "weickert", "tukey",
};

double sign_of(double x) noexcept { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string item(text.substr(0, comma));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument("rule parameter '" + item + "' is not a number");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view kind_name(ShrinkKind kind) noexcept {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<ShrinkKind> parse_kind(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return kAllShrinkKinds[i];
  }
  // Short names used in the simulation tables.
  if (name == "lin") return ShrinkKind::kLinear;
  if (name == "char") return ShrinkKind::kCharbonnier;
  if (name == "perona") return ShrinkKind::kPeronaMalik;
  if (name == "weick") return ShrinkKind::kWeickert;
  return std::nullopt;
}

ShrinkageRule::ShrinkageRule(ShrinkKind kind, double lambda, double lambda2, double a)
    : kind_(kind), lambda_(lambda), lambda2_(lambda2), a_(a) {
  require_positive(lambda, "lambda");
  if (kind == ShrinkKind::kFirm) {
    require_positive(lambda2, "lambda2");
    if (!(lambda < lambda2)) throw std::invalid_argument("firm requires lambda1 < lambda2");
  }
  if (kind == ShrinkKind::kScad && !(a > 2.0 && std::isfinite(a))) {
    throw std::invalid_argument("scad requires a > 2");
  }
}

ShrinkageRule ShrinkageRule::hard(double lambda) {
  return {ShrinkKind::kHard, lambda, 0.0, 0.0};
}
ShrinkageRule ShrinkageRule::soft(double lambda) {
  return {ShrinkKind::kSoft, lambda, 0.0, 0.0};
}
ShrinkageRule ShrinkageRule::firm(double lambda1, double lambda2) {
  return {ShrinkKind::kFirm, lambda1, lambda2, 0.0};
}
ShrinkageRule ShrinkageRule::garrote(double lambda) {
  return {ShrinkKind::kGarrote, lambda, 0.0, 0.0};
}
ShrinkageRule ShrinkageRule::scad(double lambda, double a) {
  return {ShrinkKind::kScad, lambda, 0.0, a};
}
ShrinkageRule ShrinkageRule::linear(double lambda) {
  return {ShrinkKind::kLinear, lambda, 0.0, 0.0};
}
ShrinkageRule ShrinkageRule::charbonnier(double lambda) {
  return {ShrinkKind::kCharbonnier, lambda, 0.0, 0.0};
}
ShrinkageRule ShrinkageRule::perona_malik(double lambda) {
  return {ShrinkKind::kPeronaMalik, lambda, 0.0, 0.0};
}
ShrinkageRule ShrinkageRule::weickert(double lambda) {
  return {ShrinkKind::kWeickert, lambda, 0.0, 0.0};
}
ShrinkageRule ShrinkageRule::tukey(double lambda) {
  return {ShrinkKind::kTukey, lambda, 0.0, 0.0};
}

ShrinkageRule ShrinkageRule::make(ShrinkKind kind, double lambda, std::optional<double> lambda2,
                                  std::optional<double> a) {
  switch (kind) {
    case ShrinkKind::kFirm:
      return firm(lambda, lambda2.value_or(2.0 * lambda));
    case ShrinkKind::kScad:
      return scad(lambda, a.value_or(kScadDefaultA));
    default:
      return {kind, lambda, 0.0, 0.0};
  }
}

double ShrinkageRule::apply(double x) const noexcept {
  const double ax = std::abs(x);
  const double lam = lambda_;
  switch (kind_) {
    case ShrinkKind::kHard:
      return ax <= lam ? 0.0 : x;
    case ShrinkKind::kSoft:
      return ax <= lam ? 0.0 : sign_of(x) * (ax - lam);
    case ShrinkKind::kFirm:
      if (ax <= lam) return 0.0;
      if (ax <= lambda2_) return sign_of(x) * lambda2_ * (ax - lam) / (lambda2_ - lam);
      return x;
    case ShrinkKind::kGarrote:
      return ax <= lam ? 0.0 : x - lam * lam / x;
    case ShrinkKind::kScad:
      if (ax <= 2.0 * lam) return ax <= lam ? 0.0 : sign_of(x) * (ax - lam);
      if (ax <= a_ * lam) return ((a_ - 1.0) * x - a_ * lam * sign_of(x)) / (a_ - 2.0);
      return x;
    case ShrinkKind::kLinear:
      return x / (1.0 + lam);
    case ShrinkKind::kCharbonnier:
      return x * (1.0 - std::sqrt(lam * lam / (lam * lam + 2.0 * x * x)));
    case ShrinkKind::kPeronaMalik:
      return 2.0 * x * x * x / (2.0 * x * x + lam * lam);
    case ShrinkKind::kWeickert: {
      if (x == 0.0) return 0.0;
      const double r2 = (lam / ax) * (lam / ax);
      const double r4 = r2 * r2;
      return x * std::exp(-kWeickertShrinkConstant * (r4 * r4));
    }
    case ShrinkKind::kTukey: {
      if (ax > lam / std::numbers::sqrt2) return x;
      const double u = x * x / (lam * lam);
      return 4.0 * x * u - 4.0 * x * u * u;
    }
  }
  return x;
}

ShrinkageRule ShrinkageRule::with_threshold(double threshold) const {
  require_positive(threshold, "threshold");
  const double ratio = threshold / lambda_;
  return {kind_, threshold, kind_ == ShrinkKind::kFirm ? lambda2_ * ratio : lambda2_, a_};
}

std::vector<double> ShrinkageRule::kinks() const {
  switch (kind_) {
    case ShrinkKind::kHard:
    case ShrinkKind::kSoft:
    case ShrinkKind::kGarrote:
      return {lambda_};
    case ShrinkKind::kFirm:
      return {lambda_, lambda2_};
    case ShrinkKind::kScad:
      return {lambda_, 2.0 * lambda_, a_ * lambda_};
    case ShrinkKind::kTukey:
      return {lambda_ / std::numbers::sqrt2};
    default:
      return {};
  }
}

double ShrinkageRule::scale() const noexcept {
  switch (kind_) {
    case ShrinkKind::kFirm:
      return lambda2_;
    case ShrinkKind::kScad:
      return a_ * lambda_;
    default:
      return lambda_;
  }
}

std::string ShrinkageRule::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << kind_name(kind_) << ':' << lambda_;
  if (kind_ == ShrinkKind::kFirm) os << ',' << lambda2_;
  if (kind_ == ShrinkKind::kScad) os << ',' << a_;
  return os.str();
}

ShrinkFunction ShrinkageRule::as_function() const {
  return [rule = *this](double x) { return rule.apply(x); };
}

ShrinkageRule parse_rule(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const auto kind = parse_kind(name);
  if (!kind) throw std::invalid_argument("unknown shrinkage rule '" + std::string(name) + "'");
  std::vector<double> params;
  if (colon != std::string_view::npos) params = parse_numbers(spec.substr(colon + 1));
  const std::size_t max_params =
      (*kind == ShrinkKind::kFirm || *kind == ShrinkKind::kScad) ? 2 : 1;
  if (params.size() > max_params) {
    throw std::invalid_argument("too many parameters for rule '" + std::string(name) + "'");
  }
  const double lambda = params.empty() ? 1.0 : params[0];
  std::optional<double> second;
  if (params.size() == 2) second = params[1];
  if (*kind == ShrinkKind::kFirm) return ShrinkageRule::make(*kind, lambda, second);
  if (*kind == ShrinkKind::kScad) return ShrinkageRule::make(*kind, lambda, std::nullopt, second);
  return ShrinkageRule::make(*kind, lambda);
}

LimitingCasesReport limiting_cases_check(double lambda, double hard_gap, double soft_lambda2,
                                         double x_max, std::size_t grid_points) {
  const auto near_hard = ShrinkageRule::firm(lambda, lambda + hard_gap);
  const auto near_soft = ShrinkageRule::firm(lambda, soft_lambda2);
  const auto hard = ShrinkageRule::hard(lambda);
  const auto soft = ShrinkageRule::soft(lambda);

  LimitingCasesReport report;
  report.grid_points = grid_points;
  report.hard_tolerance = hard_gap;
  report.soft_tolerance = 2.0 * x_max * lambda / (soft_lambda2 - lambda);
  const double step = grid_points > 1 ? 2.0 * x_max / static_cast<double>(grid_points - 1) : 0.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = -x_max + step * static_cast<double>(i);
    const double ax = std::abs(x);
    const bool in_band = ax > lambda - hard_gap && ax <= lambda + 2.0 * hard_gap;
    if (!in_band) {
      report.max_dev_from_hard =
          std::max(report.max_dev_from_hard, std::abs(near_hard(x) - hard(x)));
    }
    report.max_dev_from_soft = std::max(report.max_dev_from_soft, std::abs(near_soft(x) - soft(x)));
  }
  return report;
}

}  // namespace wavshrink
