// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavshrink/denoise.hpp"
#include "wavshrink/filters.hpp"

namespace wavshrink {

/// A benchmark function on [0, 1], sampled at t_i = i / n.
///
///   heavisine  4 sin(4 pi t) - sgn(t - 0.3) - sgn(0.72 - t)
///   blip       (0.32 + 0.6 t + 0.3 exp(-100 (t - 0.3)^2))  for t <= 0.8,
///              (-0.28 + 0.6 t + 0.3 exp(-100 (t - 1.3)^2)) for t > 0.8
///   corner     623.87 t^3 (1 - 2 t)            on [0, 0.5],
///              187.161 (0.125 - t^3) t^4       on (0.5, 0.8],
///              3708.470441 (t - 1)^3           on (0.8, 1]
///   wave       0.5 + 0.2 cos(4 pi t) + 0.1 cos(24 pi t)
struct TestSignal {
  std::string name;
  std::function<double(double)> evaluate;

  [[nodiscard]] std::vector<double> sample(std::size_t n) const;
};

[[nodiscard]] TestSignal test_signal(std::string_view name);
[[nodiscard]] std::vector<std::string> test_signal_names();

struct NoisySample {
  std::vector<double> noisy;
  double sigma = 0.0;
};

/// sigma = population sd(values) / snr; noisy = values + sigma * N(0, 1) draws
/// from a generator seeded with `seed`. Throws for a constant signal.
[[nodiscard]] NoisySample make_noisy(const std::vector<double>& values, double snr,
                                     std::uint64_t seed);

/// A named denoiser. An empty config is the identity (no denoising).
struct BenchMethod {
  std::string name;
  std::optional<DenoiseConfig> config;

  [[nodiscard]] std::vector<double> run(const std::vector<double>& noisy) const;
};

/// The ten rules of the comparison table with universal thresholds and MAD
/// noise scale: Weick, Hard, Soft, Garrote, Firm, Lin, Perona, Char, Tukey,
/// Scad (a = 3.7). Firm uses lambda2 = 3.7 lambda, the point where Scad
/// reaches the identity.
[[nodiscard]] std::vector<BenchMethod> table1_methods(const FilterPair& basis, int coarse_level);

/// Case-insensitive lookup among the table methods, "identity", "BlockJS",
/// "NeighBlock" and "NeighCoeff".
[[nodiscard]] BenchMethod method_by_name(std::string_view name, const FilterPair& basis,
                                         int coarse_level);

struct BenchResult {
  std::string method;
  std::string signal;
  double snr = 0.0;
  std::size_t n = 0;
  std::size_t reps = 0;
  double mean_mse = 0.0;
  double sd_mse = 0.0;
  std::vector<double> per_rep_mse;
  /// Set when the denoiser threw; the MSE fields are then NaN.
  std::optional<std::string> error;
};

/// Seed of replicate `rep` of (signal, snr). Every method sees the same noise.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view signal,
                                        double snr, std::size_t rep) noexcept;

/// Full factorial sweep. Results are ordered signal, snr, method and do not
/// depend on `threads`.
[[nodiscard]] std::vector<BenchResult> run_mc(const std::vector<BenchMethod>& methods,
                                              const std::vector<TestSignal>& signals,
                                              const std::vector<double>& snrs, std::size_t n,
                                              std::size_t reps, std::uint64_t base_seed,
                                              unsigned threads = 1);

/// Columns: method, signal, snr, n, reps, mean_mse, sd_mse.
void write_bench_csv(std::ostream& out, const std::vector<BenchResult>& results);

[[nodiscard]] const BenchResult* find_result(const std::vector<BenchResult>& results,
                                             std::string_view method, std::string_view signal,
                                             double snr) noexcept;

}  // namespace wavshrink
