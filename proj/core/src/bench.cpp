// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/bench.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "wavshrink/signal_io.hpp"

namespace wavshrink {
namespace {

double sgn(double x) noexcept { return static_cast<double>((x > 0.0) - (x < 0.0)); }

double heavisine(double t) {
  return 4.0 * std::sin(4.0 * std::numbers::pi * t) - sgn(t - 0.3) - sgn(0.72 - t);
}

double blip(double t) {
  if (t <= 0.8) return 0.32 + 0.6 * t + 0.3 * std::exp(-100.0 * (t - 0.3) * (t - 0.3));
  return -0.28 + 0.6 * t + 0.3 * std::exp(-100.0 * (t - 1.3) * (t - 1.3));
}

double corner(double t) {
  if (t <= 0.5) return 623.87 * t * t * t * (1.0 - 2.0 * t);
  if (t <= 0.8) return 187.161 * (0.125 - t * t * t) * t * t * t * t;
  const double u = t - 1.0;
  return 3708.470441 * u * u * u;
}

double wave(double t) {
  return 0.5 + 0.2 * std::cos(4.0 * std::numbers::pi * t) +
         0.1 * std::cos(24.0 * std::numbers::pi * t);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

DenoiseConfig base_config(const FilterPair& basis, int coarse_level) {
  DenoiseConfig config;
  config.basis = basis;
  config.coarse_level = coarse_level;
  config.threshold = UniversalThreshold{};
  config.sigma = MadSigma{};
  return config;
}

BenchMethod rule_method(std::string name, ShrinkageRule rule, const FilterPair& basis,
                        int coarse_level) {
  auto config = base_config(basis, coarse_level);
  config.method = rule;
  return {std::move(name), config};
}

BenchMethod block_method(std::string name, BlockScheme scheme, const FilterPair& basis,
                         int coarse_level) {
  auto config = base_config(basis, coarse_level);
  BlockConfig block;
  block.scheme = scheme;
  config.method = block;
  return {std::move(name), config};
}

double mean_squared_error(const std::vector<double>& estimate, const std::vector<double>& truth) {
  double total = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double e = estimate[i] - truth[i];
    total += e * e;
  }
  return total / static_cast<double>(truth.size());
}

struct Cell {
  const TestSignal* signal;
  double snr;
};

// All methods of one (signal, snr) cell, rep by rep on shared noise.
std::vector<BenchResult> run_cell(const std::vector<BenchMethod>& methods, const Cell& cell,
                                  std::size_t n, std::size_t reps, std::uint64_t base_seed) {
  const auto truth = cell.signal->sample(n);
  std::vector<BenchResult> out(methods.size());
  for (std::size_t m = 0; m < methods.size(); ++m) {
    out[m].method = methods[m].name;
    out[m].signal = cell.signal->name;
    out[m].snr = cell.snr;
    out[m].n = n;
    out[m].reps = reps;
    out[m].per_rep_mse.reserve(reps);
  }
  for (std::size_t rep = 0; rep < reps; ++rep) {
    const auto sample = make_noisy(truth, cell.snr, derive_seed(base_seed, cell.signal->name,
                                                                cell.snr, rep));
    for (std::size_t m = 0; m < methods.size(); ++m) {
      if (out[m].error) continue;
      try {
        out[m].per_rep_mse.push_back(mean_squared_error(methods[m].run(sample.noisy), truth));
      } catch (const std::exception& e) {
        out[m].error = e.what();
      }
    }
  }
  constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
  for (auto& result : out) {
    if (result.error) {
      result.mean_mse = kNan;
      result.sd_mse = kNan;
      continue;
    }
    double sum = 0.0;
    for (const double v : result.per_rep_mse) sum += v;
    result.mean_mse = sum / static_cast<double>(reps);
    double ss = 0.0;
    for (const double v : result.per_rep_mse) ss += (v - result.mean_mse) * (v - result.mean_mse);
    result.sd_mse = reps > 1 ? std::sqrt(ss / static_cast<double>(reps - 1)) : 0.0;
  }
  return out;
}

}  // namespace

std::vector<double> TestSignal::sample(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("sample size must be positive");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = evaluate(static_cast<double>(i) / static_cast<double>(n));
  }
  return out;
}

TestSignal test_signal(std::string_view name) {
  const auto key = lower(name);
  if (key == "heavisine" || key == "heavi") return {"heavisine", heavisine};
  if (key == "blip") return {"blip", blip};
  if (key == "corner") return {"corner", corner};
  if (key == "wave") return {"wave", wave};
  throw std::invalid_argument("unknown test signal '" + std::string(name) + "'");
}

std::vector<std::string> test_signal_names() { return {"heavisine", "blip", "corner", "wave"}; }

NoisySample make_noisy(const std::vector<double>& values, double snr, std::uint64_t seed) {
  if (values.size() < 2) throw std::invalid_argument("make_noisy needs at least two samples");
  if (!(snr > 0.0)) throw std::invalid_argument("SNR must be positive");
  double mean = 0.0;
  for (const double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(values.size()));
  if (!(sd > 0.0)) throw std::invalid_argument("cannot set an SNR for a constant signal");

  NoisySample out;
  out.sigma = sd / snr;
  out.noisy = values;
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& v : out.noisy) v += out.sigma * normal(engine);
  return out;
}

std::vector<double> BenchMethod::run(const std::vector<double>& noisy) const {
  if (!config) return noisy;
  return denoise(noisy, *config);
}

std::vector<BenchMethod> table1_methods(const FilterPair& basis, int coarse_level) {
  std::vector<BenchMethod> out;
  out.push_back(rule_method("Weick", ShrinkageRule::weickert(1.0), basis, coarse_level));
  out.push_back(rule_method("Hard", ShrinkageRule::hard(1.0), basis, coarse_level));
  out.push_back(rule_method("Soft", ShrinkageRule::soft(1.0), basis, coarse_level));
  out.push_back(rule_method("Garrote", ShrinkageRule::garrote(1.0), basis, coarse_level));
  out.push_back(rule_method("Firm", ShrinkageRule::firm(1.0, kScadDefaultA), basis, coarse_level));
  out.push_back(rule_method("Lin", ShrinkageRule::linear(1.0), basis, coarse_level));
  out.push_back(rule_method("Perona", ShrinkageRule::perona_malik(1.0), basis, coarse_level));
  out.push_back(rule_method("Char", ShrinkageRule::charbonnier(1.0), basis, coarse_level));
  out.push_back(rule_method("Tukey", ShrinkageRule::tukey(1.0), basis, coarse_level));
  out.push_back(rule_method("Scad", ShrinkageRule::scad(1.0), basis, coarse_level));
  return out;
}

BenchMethod method_by_name(std::string_view name, const FilterPair& basis, int coarse_level) {
  const auto key = lower(name);
  if (key == "identity" || key == "none") return {"identity", std::nullopt};
  if (key == "blockjs" || key == "block_js") {
    return block_method("BlockJS", BlockScheme::kBlockJs, basis, coarse_level);
  }
  if (key == "neighblock" || key == "neigh_block") {
    return block_method("NeighBlock", BlockScheme::kNeighBlock, basis, coarse_level);
  }
  if (key == "neighcoeff" || key == "neigh_coeff") {
    return block_method("NeighCoeff", BlockScheme::kNeighCoeff, basis, coarse_level);
  }
  for (auto& method : table1_methods(basis, coarse_level)) {
    if (lower(method.name) == key) return method;
    const auto& rule = std::get<ShrinkageRule>(method.config->method);
    if (kind_name(rule.kind()) == key) return method;
  }
  throw std::invalid_argument("unknown bench method '" + std::string(name) + "'");
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view signal, double snr,
                          std::size_t rep) noexcept {
  std::uint64_t h = splitmix64(base_seed);
  h = splitmix64(h ^ fnv1a(signal));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(snr));
  return splitmix64(h ^ static_cast<std::uint64_t>(rep));
}

std::vector<BenchResult> run_mc(const std::vector<BenchMethod>& methods,
                                const std::vector<TestSignal>& signals,
                                const std::vector<double>& snrs, std::size_t n, std::size_t reps,
                                std::uint64_t base_seed, unsigned threads) {
  if (reps == 0) throw std::invalid_argument("reps must be positive");
  if (n < 2 || !is_power_of_two(n)) throw LengthError("bench n must be a power of two >= 2");
  std::vector<Cell> cells;
  for (const auto& signal : signals) {
    for (const double snr : snrs) cells.push_back({&signal, snr});
  }
  std::vector<std::vector<BenchResult>> per_cell(cells.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  if (workers == 1) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      per_cell[c] = run_cell(methods, cells[c], n, reps, base_seed);
    }
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < cells.size(); c += workers) {
          per_cell[c] = run_cell(methods, cells[c], n, reps, base_seed);
        }
      });
    }
  }
  std::vector<BenchResult> out;
  out.reserve(cells.size() * methods.size());
  for (auto& cell : per_cell) {
    for (auto& result : cell) out.push_back(std::move(result));
  }
  return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchResult>& results) {
  out << "method,signal,snr,n,reps,mean_mse,sd_mse\n";
  for (const auto& r : results) {
    out << r.method << ',' << r.signal << ',' << format_double(r.snr) << ',' << r.n << ','
        << r.reps << ',' << format_double(r.mean_mse) << ',' << format_double(r.sd_mse) << '\n';
  }
}

const BenchResult* find_result(const std::vector<BenchResult>& results, std::string_view method,
                               std::string_view signal, double snr) noexcept {
  for (const auto& r : results) {
    if (r.method == method && r.signal == signal && r.snr == snr) return &r;
  }
  return nullptr;
}

}  // namespace wavshrink
