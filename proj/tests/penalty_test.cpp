// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "wavshrink/errors.hpp"
#include "wavshrink/penalty.hpp"

namespace wavshrink {
namespace {

using testing::linspace;

// Closed-form penalties under the (z - t)^2 + 2 p(|t|) convention.
double scad_penalty(double t, double lambda, double a) {
  if (t <= lambda) return lambda * t;
  if (t <= a * lambda) return -(t * t - 2 * a * lambda * t + lambda * lambda) / (2 * (a - 1));
  return (a + 1) * lambda * lambda / 2;
}

double firm_penalty(double t, double l1, double l2) {
  if (t <= l2) return l1 * t - l1 * t * t / (2 * l2);
  return l1 * l2 / 2;
}

double garrote_penalty(double t, double lambda) {
  const double root = std::sqrt(t * t + 4 * lambda * lambda);
  return 0.5 * (0.5 * t * root + 2 * lambda * lambda * std::log((t + root) / (2 * lambda)) -
                0.5 * t * t);
}

TEST(GeneralizedInverse, WorkedValues) {
  EXPECT_DOUBLE_EQ(generalized_inverse(ShrinkageRule::soft(1.0), 2.0), 3.0);
  EXPECT_DOUBLE_EQ(generalized_inverse(ShrinkageRule::hard(1.0), 0.5), 1.0);
  EXPECT_DOUBLE_EQ(generalized_inverse(ShrinkageRule::hard(1.0), 2.0), 2.0);
  EXPECT_DOUBLE_EQ(generalized_inverse(ShrinkageRule::linear(1.0), 2.0), 4.0);
}

TEST(GeneralizedInverse, GarroteMatchesQuadraticFormula) {
  const auto rule = ShrinkageRule::garrote(1.0);
  EXPECT_NEAR(generalized_inverse(rule, 1.5), 2.0, 1e-11);
  for (const double x : linspace(0.01, 20.0, 200)) {
    const double oracle = (x + std::sqrt(x * x + 4.0)) / 2.0;
    EXPECT_NEAR(generalized_inverse(rule, x), oracle, 1e-11 * oracle) << x;
  }
}

TEST(GeneralizedInverse, BisectionAgreesWithClosedForms) {
  for (const auto& rule :
       {ShrinkageRule::soft(0.7), ShrinkageRule::hard(1.3), ShrinkageRule::linear(2.0)}) {
    for (const double x : linspace(0.0, 10.0, 101)) {
      const double bisected = generalized_inverse_bisect(rule.as_function(), x, 1e-3);
      EXPECT_NEAR(bisected, generalized_inverse(rule, x), 1e-10) << rule.to_string() << " " << x;
    }
  }
}

TEST(GeneralizedInverse, BracketFailureThrows) {
  const ShrinkFunction flat = [](double) { return 0.0; };
  EXPECT_THROW((void)generalized_inverse_bisect(flat, 1.0, 1.0), NumericalError);
}

TEST(Penalty, WorkedValues) {
  const auto soft = penalty_from_rule(ShrinkageRule::soft(1.0));
  for (const double z : {0.0, 0.3, 2.0, 7.5}) EXPECT_NEAR(soft(z), z, 1e-12);
  EXPECT_NEAR(penalty_from_rule(ShrinkageRule::hard(1.0))(0.5), 0.375, 1e-12);
  EXPECT_NEAR(penalty_from_rule(ShrinkageRule::linear(1.0))(2.0), 2.0, 1e-12);
}

TEST(Penalty, MatchesIndependentClosedForms) {
  const auto scad = penalty_from_rule(ShrinkageRule::scad(1.0, 3.7));
  const auto firm = penalty_from_rule(ShrinkageRule::firm(1.0, 2.5));
  const auto garrote = penalty_from_rule(ShrinkageRule::garrote(1.0));
  for (const double t : linspace(0.0, 60.0, 1201)) {
    EXPECT_NEAR(scad(t), scad_penalty(t, 1.0, 3.7), 1e-10) << t;
    EXPECT_NEAR(firm(t), firm_penalty(t, 1.0, 2.5), 1e-10) << t;
    EXPECT_NEAR(garrote(t), garrote_penalty(t, 1.0), 1e-9) << t;
  }
}

TEST(Penalty, InterpolationTracksExactValues) {
  for (const auto kind : kAllShrinkKinds) {
    const auto p = penalty_from_rule(ShrinkageRule::make(kind, 1.0));
    for (const double t : linspace(0.0, 40.0, 997)) {
      EXPECT_NEAR(p.interpolate(t), p(t), 1e-6 * std::max(1.0, p(t))) << kind_name(kind) << " " << t;
    }
  }
}

class EveryPenalty : public ::testing::TestWithParam<ShrinkKind> {};

TEST_P(EveryPenalty, ZeroAtOriginMonotoneContinuous) {
  const auto rule = ShrinkageRule::make(GetParam(), 1.0);
  const auto p = penalty_from_rule(rule);
  EXPECT_EQ(p(0.0), 0.0);
  auto worst_jump = [&](std::size_t points) {
    double previous = 0.0;
    double worst = 0.0;
    for (const double t : linspace(0.0, 30.0, points)) {
      const double v = p(t);
      EXPECT_GE(v, previous - 1e-12) << t;
      worst = std::max(worst, v - previous);
      previous = v;
    }
    return worst;
  };
  // A tenfold finer grid shrinks every step tenfold.
  EXPECT_LT(worst_jump(30001), 0.2 * worst_jump(3001));
  for (const double t : linspace(0.0, 30.0, 301)) {
    EXPECT_EQ(p(-t), p(t));
    EXPECT_GE(generalized_inverse(rule, t) - t, -1e-12) << t;
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, EveryPenalty, ::testing::ValuesIn(kAllShrinkKinds),
                         [](const auto& info) { return std::string(kind_name(info.param)); });

TEST(Penalty, SingularAtZeroExactlyForThresholdingRules) {
  const double h = 1e-6;
  for (const auto kind : {ShrinkKind::kHard, ShrinkKind::kSoft, ShrinkKind::kFirm,
                          ShrinkKind::kGarrote, ShrinkKind::kScad}) {
    const auto p = penalty_from_rule(ShrinkageRule::make(kind, 1.0));
    EXPECT_GE(p(h) / h, 0.5) << kind_name(kind);
  }
  const auto ridge = penalty_from_rule(ShrinkageRule::linear(1.0));
  EXPECT_LT(ridge(h) / h, 1e-5);
}

TEST(Minimizer, WorkedValues) {
  const double resolution = 2.0 * 3.0 / 100000.0;
  EXPECT_NEAR(penalized_ls_minimizer(2.0, penalty_from_rule(ShrinkageRule::soft(1.0))), 1.0,
              resolution);
  EXPECT_NEAR(penalized_ls_minimizer(0.5, penalty_from_rule(ShrinkageRule::hard(1.0))), 0.0,
              resolution);
  for (const auto kind : kAllShrinkKinds) {
    EXPECT_NEAR(penalized_ls_minimizer(0.0, penalty_from_rule(ShrinkageRule::make(kind, 1.0))),
                0.0, 1e-6);
  }
}

TEST(Minimizer, RecoversRuleOnCoarseGrid) {
  for (const auto kind : kAllShrinkKinds) {
    const auto rule = ShrinkageRule::make(kind, 1.0);
    const auto p = penalty_from_rule(rule);
    for (const double z : linspace(-10.0, 10.0, 41)) {
      if (kind == ShrinkKind::kHard && std::abs(std::abs(z) - 1.0) < 0.11) continue;
      EXPECT_NEAR(penalized_ls_minimizer(z, p, 20001), rule(z), 2e-4) << rule.to_string() << " z=" << z;
    }
  }
}

}  // namespace
}  // namespace wavshrink
