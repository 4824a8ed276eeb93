// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace wavshrink::testing {

// Small seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal(double sd = 1.0) { return std::normal_distribution<double>(0.0, sd)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  std::vector<double> normals(std::size_t n, double sd = 1.0) {
    std::vector<double> out(n);
    for (double& v : out) v = normal(sd);
    return out;
  }
  std::vector<double> uniforms(std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (double& v : out) v = uniform(lo, hi);
    return out;
  }
  // Heavy-tailed mix: mostly unit normals with occasional large spikes.
  std::vector<double> spiky(std::size_t n) {
    std::vector<double> out(n);
    for (double& v : out) v = uniform(0.0, 1.0) < 0.1 ? normal(20.0) : normal();
    return out;
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (const double v : x) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double sum_squares(std::span<const double> x) {
  double s = 0.0;
  for (const double v : x) s += v * v;
  return s;
}

inline double mse(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s / static_cast<double>(a.size());
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

}  // namespace wavshrink::testing
