// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "wavshrink/shrink.hpp"

namespace wavshrink {
namespace {

using testing::linspace;

std::vector<ShrinkageRule> catalog(double lambda) {
  std::vector<ShrinkageRule> out;
  for (const auto kind : kAllShrinkKinds) out.push_back(ShrinkageRule::make(kind, lambda));
  return out;
}

TEST(Shrink, WorkedValues) {
  EXPECT_DOUBLE_EQ(ShrinkageRule::soft(1.0)(2.0), 1.0);
  EXPECT_NEAR(ShrinkageRule::scad(1.0, 3.7)(3.0), 4.4 / 1.7, 1e-15);
  EXPECT_DOUBLE_EQ(ShrinkageRule::garrote(1.0)(2.0), 1.5);
  EXPECT_DOUBLE_EQ(ShrinkageRule::firm(1.0, 2.0)(1.5), 1.0);
  EXPECT_DOUBLE_EQ(ShrinkageRule::hard(1.0)(1.5), 1.5);
  EXPECT_DOUBLE_EQ(ShrinkageRule::linear(1.0)(3.0), 1.5);
  EXPECT_NEAR(ShrinkageRule::perona_malik(1.0)(1.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(ShrinkageRule::charbonnier(1.0)(1.0), 1.0 - std::sqrt(1.0 / 3.0), 1e-15);
  EXPECT_NEAR(ShrinkageRule::tukey(2.0)(1.0), 4.0 / 4.0 - 4.0 / 16.0, 1e-15);
  EXPECT_NEAR(ShrinkageRule::weickert(1.0)(1.0), std::exp(-0.20718), 1e-15);
}

TEST(Shrink, HardTieGoesToZero) {
  EXPECT_EQ(ShrinkageRule::hard(1.0)(1.0), 0.0);
  EXPECT_EQ(ShrinkageRule::hard(1.0)(-1.0), 0.0);
  EXPECT_EQ(ShrinkageRule::hard(1.0)(std::nextafter(1.0, 2.0)), std::nextafter(1.0, 2.0));
}

TEST(Shrink, WeickertLimits) {
  const auto w = ShrinkageRule::weickert(1.0);
  EXPECT_EQ(w(0.0), 0.0);
  EXPECT_NEAR(w(1e6) / 1e6, 1.0, 1e-15);
  EXPECT_NEAR(kWeickertShrinkConstant, 0.20718, 1e-15);
  // Nonzero wherever exp(-0.20718 / x^8) is representable.
  for (const double x : linspace(0.4, 50.0, 1000)) {
    EXPECT_GT(w(x), 0.0) << x;
    EXPECT_LT(w(-x), 0.0) << x;
  }
}

TEST(Shrink, TukeyTransitionPoint) {
  const auto t = ShrinkageRule::tukey(1.0);
  const double knot = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(t(knot), knot, 1e-15);
  EXPECT_EQ(t(knot + 1e-9), knot + 1e-9);
  EXPECT_LT(t(knot - 1e-3), knot - 1e-3);
}

TEST(Shrink, ConstructionRejectsBadParameters) {
  EXPECT_THROW((void)ShrinkageRule::soft(0.0), std::invalid_argument);
  EXPECT_THROW((void)ShrinkageRule::hard(-1.0), std::invalid_argument);
  EXPECT_THROW((void)ShrinkageRule::firm(2.0, 2.0), std::invalid_argument);
  EXPECT_THROW((void)ShrinkageRule::scad(1.0, 2.0), std::invalid_argument);
  EXPECT_THROW((void)ShrinkageRule::soft(std::nan("")), std::invalid_argument);
}

class EveryRule : public ::testing::TestWithParam<ShrinkKind> {};

TEST_P(EveryRule, ContractOnDenseGrid) {
  for (const double lambda : {0.3, 1.0, 4.0}) {
    const auto rule = ShrinkageRule::make(GetParam(), lambda);
    const auto grid = linspace(-50.0 * lambda, 50.0 * lambda, 10001);
    double previous = -std::numeric_limits<double>::infinity();
    for (const double x : grid) {
      const double y = rule(x);
      EXPECT_EQ(rule(-x), -y) << rule.to_string() << " antisymmetry at " << x;
      EXPECT_LE(std::abs(y), std::abs(x)) << rule.to_string() << " at " << x;
      EXPECT_TRUE(y == 0.0 || std::signbit(y) == std::signbit(x)) << rule.to_string() << " " << x;
      EXPECT_GE(y, previous) << rule.to_string() << " monotone at " << x;
      previous = y;
    }
  }
}

TEST_P(EveryRule, ContinuityExceptHard) {
  const auto rule = ShrinkageRule::make(GetParam(), 1.0);
  auto max_jump = [&](std::size_t points) {
    const auto grid = linspace(-10.0, 10.0, points);
    double worst = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      worst = std::max(worst, std::abs(rule(grid[i]) - rule(grid[i - 1])));
    }
    return worst;
  };
  const double coarse = max_jump(2001);
  const double fine = max_jump(20001);
  if (GetParam() == ShrinkKind::kHard) {
    EXPECT_NEAR(fine, 1.0, 2e-3);
  } else {
    EXPECT_LT(fine, 0.2 * coarse) << rule.to_string();
    EXPECT_LT(fine, 5e-3) << rule.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, EveryRule, ::testing::ValuesIn(kAllShrinkKinds),
                         [](const auto& info) { return std::string(kind_name(info.param)); });

TEST(Shrink, HardHasExactlyOneJumpPerSide) {
  const auto rule = ShrinkageRule::hard(1.0);
  const auto grid = linspace(0.0, 10.0, 10000);
  int jumps = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double gap = rule(grid[i]) - rule(grid[i - 1]);
    if (gap > 0.5) {
      ++jumps;
      EXPECT_LE(grid[i - 1], 1.0);
      EXPECT_GT(grid[i], 1.0);
      EXPECT_NEAR(gap, 1.0, 2e-3);
    }
  }
  EXPECT_EQ(jumps, 1);
}

TEST(Shrink, KillRegions) {
  const auto grid = linspace(-1.0, 1.0, 2001);
  for (const auto& rule : {ShrinkageRule::hard(1.0), ShrinkageRule::soft(1.0),
                           ShrinkageRule::garrote(1.0), ShrinkageRule::firm(1.0, 2.5),
                           ShrinkageRule::scad(1.0)}) {
    for (const double x : grid) EXPECT_EQ(rule(x), 0.0) << rule.to_string() << " " << x;
    EXPECT_NE(rule(1.0001), 0.0) << rule.to_string();
  }
}

TEST(LimitingCases, PointValues) {
  EXPECT_NEAR(ShrinkageRule::firm(1.0, 1.0 + 1e-9)(1.5), 1.5, 1e-6);
  EXPECT_NEAR(ShrinkageRule::firm(1.0, 1e9)(5.0), 4.0, 1e-6);
}

TEST(LimitingCases, GridSweep) {
  const auto report = limiting_cases_check();
  EXPECT_EQ(report.grid_points, 4001u);
  EXPECT_TRUE(report.passed()) << report.max_dev_from_hard << " " << report.max_dev_from_soft;
  EXPECT_LE(report.max_dev_from_soft, 1e-6);
  // A moderate lambda2 leaves a visible gap from soft.
  const auto loose = limiting_cases_check(1.0, 1e-9, 50.0);
  EXPECT_GT(loose.max_dev_from_soft, 1e-3);
}

TEST(ParseRule, Specs) {
  const auto firm = parse_rule("firm:1.0,2.0");
  EXPECT_EQ(firm.kind(), ShrinkKind::kFirm);
  EXPECT_EQ(firm.lambda2(), 2.0);
  const auto scad = parse_rule("scad:1.5,4");
  EXPECT_EQ(scad.a(), 4.0);
  EXPECT_EQ(scad.lambda(), 1.5);
  EXPECT_EQ(parse_rule("soft").lambda(), 1.0);
  EXPECT_EQ(parse_rule("perona").kind(), ShrinkKind::kPeronaMalik);
  EXPECT_EQ(parse_rule("firm:1").lambda2(), 2.0);
  EXPECT_THROW((void)parse_rule("median:1"), std::invalid_argument);
  EXPECT_THROW((void)parse_rule("soft:abc"), std::invalid_argument);
  EXPECT_THROW((void)parse_rule("soft:1,2,3"), std::invalid_argument);
}

TEST(Shrink, WithThresholdRescales) {
  const auto firm = ShrinkageRule::firm(1.0, 3.0).with_threshold(2.0);
  EXPECT_EQ(firm.lambda(), 2.0);
  EXPECT_EQ(firm.lambda2(), 6.0);
  const auto scad = ShrinkageRule::scad(1.0, 3.7).with_threshold(0.5);
  EXPECT_EQ(scad.a(), 3.7);
  EXPECT_EQ(scad.lambda(), 0.5);
  // Scale equivariance: delta_{c lambda}(c x) = c delta_lambda(x).
  for (const auto& rule : catalog(1.0)) {
    if (rule.kind() == ShrinkKind::kLinear) continue;
    const auto scaled = rule.with_threshold(3.0);
    for (const double x : linspace(-8.0, 8.0, 161)) {
      EXPECT_NEAR(scaled(3.0 * x), 3.0 * rule(x), 1e-12 * std::max(1.0, std::abs(x)))
          << rule.to_string();
    }
  }
}

}  // namespace
}  // namespace wavshrink
