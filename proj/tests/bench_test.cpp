// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

#include "support.hpp"
#include "wavshrink/bench.hpp"

namespace wavshrink {
namespace {

double population_sd(const std::vector<double>& v) {
  double mean = 0.0;
  for (const double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (const double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

TEST(TestSignals, CatalogAndHeavisineFormula) {
  const auto names = test_signal_names();
  ASSERT_EQ(names.size(), 4u);
  for (const auto& name : names) {
    const auto values = test_signal(name).sample(256);
    ASSERT_EQ(values.size(), 256u);
    for (const double v : values) EXPECT_TRUE(std::isfinite(v)) << name;
    EXPECT_GT(population_sd(values), 0.0) << name;
  }
  const auto heavisine = test_signal("heavisine");
  for (const double t : {0.1, 0.5, 0.9}) {
    const double expected = 4.0 * std::sin(4.0 * std::numbers::pi * t) -
                            (t > 0.3 ? 1.0 : -1.0) - (0.72 > t ? 1.0 : -1.0);
    EXPECT_NEAR(heavisine.evaluate(t), expected, 1e-14) << t;
  }
  EXPECT_EQ(test_signal("HEAVI").name, heavisine.name);
  EXPECT_THROW((void)test_signal("doppler"), std::invalid_argument);
}

TEST(MakeNoisy, SeededAndCalibrated) {
  const auto clean = test_signal("blip").sample(1024);
  const auto a = make_noisy(clean, 7.0, 99);
  const auto b = make_noisy(clean, 7.0, 99);
  EXPECT_EQ(a.noisy, b.noisy);
  EXPECT_DOUBLE_EQ(a.sigma, population_sd(clean) / 7.0);
  std::vector<double> noise(clean.size());
  for (std::size_t i = 0; i < clean.size(); ++i) noise[i] = a.noisy[i] - clean[i];
  EXPECT_NEAR(population_sd(noise) / a.sigma, 1.0, 0.1);
  EXPECT_NE(make_noisy(clean, 7.0, 100).noisy, a.noisy);
}

TEST(MakeNoisy, RejectsDegenerateInput) {
  EXPECT_THROW((void)make_noisy(std::vector<double>(8, 1.0), 3.0, 1), std::invalid_argument);
  EXPECT_THROW((void)make_noisy({1.0, 2.0}, 0.0, 1), std::invalid_argument);
  EXPECT_THROW((void)make_noisy({1.0}, 3.0, 1), std::invalid_argument);
}

TEST(DeriveSeed, DistinguishesCells) {
  EXPECT_EQ(derive_seed(1, "blip", 3.0, 0), derive_seed(1, "blip", 3.0, 0));
  EXPECT_NE(derive_seed(1, "blip", 3.0, 0), derive_seed(1, "blip", 3.0, 1));
  EXPECT_NE(derive_seed(1, "blip", 3.0, 0), derive_seed(1, "blip", 7.0, 0));
  EXPECT_NE(derive_seed(1, "blip", 3.0, 0), derive_seed(1, "wave", 3.0, 0));
  EXPECT_NE(derive_seed(1, "blip", 3.0, 0), derive_seed(2, "blip", 3.0, 0));
}

TEST(MethodByName, Lookup) {
  const auto basis = daubechies(4);
  EXPECT_EQ(method_by_name("Soft", basis, 0).name, "Soft");
  EXPECT_EQ(method_by_name("soft", basis, 0).name, "Soft");
  EXPECT_FALSE(method_by_name("identity", basis, 0).config.has_value());
  EXPECT_TRUE(method_by_name("BlockJS", basis, 0).config.has_value());
  EXPECT_THROW((void)method_by_name("bogus", basis, 0), std::invalid_argument);
  const auto table = table1_methods(basis, 0);
  ASSERT_EQ(table.size(), 10u);
  const std::vector<double> x{1.0, -2.0, 3.0, 0.5};
  EXPECT_EQ(method_by_name("identity", basis, 0).run(x), x);
}

class RunMcTest : public ::testing::Test {
 protected:
  std::vector<BenchMethod> methods = {method_by_name("Soft", daubechies(4), 0),
                                      method_by_name("Hard", daubechies(4), 0),
                                      method_by_name("identity", daubechies(4), 0)};
  std::vector<TestSignal> signals = {test_signal("heavisine"), test_signal("blip")};
  std::vector<double> snrs = {3.0, 7.0};
};

TEST_F(RunMcTest, OrderAndDeterminism) {
  const auto first = run_mc(methods, signals, snrs, 128, 6, 5);
  const auto second = run_mc(methods, signals, snrs, 128, 6, 5);
  ASSERT_EQ(first.size(), 12u);
  EXPECT_EQ(first[0].signal, "heavisine");
  EXPECT_EQ(first[0].snr, 3.0);
  EXPECT_EQ(first[0].method, "Soft");
  EXPECT_EQ(first[2].method, "identity");
  EXPECT_EQ(first[3].snr, 7.0);
  EXPECT_EQ(first[6].signal, "blip");
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].per_rep_mse, second[i].per_rep_mse);
  }
}

TEST_F(RunMcTest, ParallelIsBitwiseSequential) {
  const auto sequential = run_mc(methods, signals, snrs, 128, 5, 11, 1);
  for (const unsigned threads : {2u, 3u, 8u}) {
    const auto parallel = run_mc(methods, signals, snrs, 128, 5, 11, threads);
    ASSERT_EQ(parallel.size(), sequential.size());
    for (std::size_t i = 0; i < sequential.size(); ++i) {
      EXPECT_EQ(std::memcmp(parallel[i].per_rep_mse.data(), sequential[i].per_rep_mse.data(),
                            sizeof(double) * sequential[i].per_rep_mse.size()),
                0);
      EXPECT_EQ(std::memcmp(&parallel[i].mean_mse, &sequential[i].mean_mse, sizeof(double)), 0);
    }
  }
}

TEST_F(RunMcTest, SummaryStatistics) {
  const auto results = run_mc(methods, signals, snrs, 64, 7, 3);
  for (const auto& r : results) {
    ASSERT_EQ(r.per_rep_mse.size(), 7u);
    double sum = 0.0;
    for (const double m : r.per_rep_mse) sum += m;
    const double mean = sum / 7.0;
    EXPECT_NEAR(r.mean_mse, mean, 1e-15 * mean);
    double ss = 0.0;
    for (const double m : r.per_rep_mse) ss += (m - mean) * (m - mean);
    EXPECT_NEAR(r.sd_mse, std::sqrt(ss / 6.0), 1e-12 * (1.0 + r.sd_mse));
    EXPECT_FALSE(r.error.has_value());
  }
}

TEST_F(RunMcTest, IdentityMseMatchesNoiseLevel) {
  const auto results = run_mc({method_by_name("identity", haar(), 0)}, {test_signal("wave")},
                              {5.0}, 1024, 40, 2);
  const double sigma = population_sd(test_signal("wave").sample(1024)) / 5.0;
  EXPECT_NEAR(results[0].mean_mse / (sigma * sigma), 1.0, 0.05);
}

TEST(RunMc, CommonRandomNumbersAcrossMethods) {
  // Identity under two names sees the same noise.
  auto a = method_by_name("identity", haar(), 0);
  auto b = a;
  b.name = "copy";
  const auto results = run_mc({a, b}, {test_signal("corner")}, {3.0}, 64, 4, 9);
  EXPECT_EQ(results[0].per_rep_mse, results[1].per_rep_mse);
}

TEST(RunMc, CapturesMethodErrors) {
  BenchMethod broken{"broken", DenoiseConfig{}};
  broken.config->threshold = FixedThreshold{-1.0};
  const auto results = run_mc({broken}, {test_signal("blip")}, {3.0}, 64, 3, 1);
  ASSERT_EQ(results.size(), 1u);
  ASSERT_TRUE(results[0].error.has_value());
  EXPECT_TRUE(std::isnan(results[0].mean_mse));
}

TEST(RunMc, ResultsAreScaleConsistent) {
  // MSE of an equivariant method scales with the squared signal scale.
  TestSignal base = test_signal("heavisine");
  TestSignal scaled{"heavisine", [f = base.evaluate](double t) { return 4.0 * f(t); }};
  const auto method = method_by_name("Soft", daubechies(4), 0);
  const auto r1 = run_mc({method}, {base}, {3.0}, 256, 5, 21);
  const auto r2 = run_mc({method}, {scaled}, {3.0}, 256, 5, 21);
  EXPECT_NEAR(r2[0].mean_mse / r1[0].mean_mse, 16.0, 1e-9);
}

TEST(WriteBenchCsv, HeaderAndRows) {
  BenchResult r;
  r.method = "Soft";
  r.signal = "blip";
  r.snr = 3.0;
  r.n = 512;
  r.reps = 2;
  r.mean_mse = 0.25;
  r.sd_mse = 0.125;
  std::ostringstream out;
  write_bench_csv(out, {r});
  EXPECT_EQ(out.str(), "method,signal,snr,n,reps,mean_mse,sd_mse\nSoft,blip,3,512,2,0.25,0.125\n");
  std::vector<BenchResult> results{r};
  EXPECT_EQ(find_result(results, "Soft", "blip", 3.0), &results[0]);
  EXPECT_EQ(find_result(results, "Hard", "blip", 3.0), nullptr);
}

}  // namespace
}  // namespace wavshrink
