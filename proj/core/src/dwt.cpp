// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/dwt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "wavshrink/errors.hpp"

namespace wavshrink {
namespace {

// One analysis step: `in` of even length N -> N/2 scaling and N/2 detail values.
void analysis_step(std::span<const double> in, const FilterPair& basis, std::span<double> low,
                   std::span<double> high) {
  const std::size_t n = in.size();
  const std::size_t taps = basis.length();
  for (std::size_t k = 0; k < n / 2; ++k) {
    double c = 0.0;
    double d = 0.0;
    for (std::size_t m = 0; m < taps; ++m) {
      const double v = in[(2 * k + m) % n];
      c += basis.low_pass[m] * v;
      d += basis.high_pass[m] * v;
    }
    low[k] = c;
    high[k] = d;
  }
}

// Adjoint of analysis_step; `out` has length 2 * low.size().
void synthesis_step(std::span<const double> low, std::span<const double> high,
                    const FilterPair& basis, std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t taps = basis.length();
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t k = 0; k < n / 2; ++k) {
    for (std::size_t m = 0; m < taps; ++m) {
      out[(2 * k + m) % n] += basis.low_pass[m] * low[k] + basis.high_pass[m] * high[k];
    }
  }
}

}  // namespace

WaveletDecomposition WaveletDecomposition::zeros(int depth, int coarse_level) {
  if (depth < 1 || coarse_level < 0 || coarse_level >= depth) {
    throw LengthError("coarse level " + std::to_string(coarse_level) +
                      " out of range for depth " + std::to_string(depth));
  }
  WaveletDecomposition out;
  out.depth = depth;
  out.coarse_level = coarse_level;
  out.scaling.assign(std::size_t{1} << coarse_level, 0.0);
  for (int j = coarse_level; j < depth; ++j) out.details.emplace_back(std::size_t{1} << j, 0.0);
  return out;
}

std::span<double> WaveletDecomposition::level(int j) {
  if (j < coarse_level || j >= depth) throw LengthError("level index out of range");
  return details[static_cast<std::size_t>(j - coarse_level)];
}

std::span<const double> WaveletDecomposition::level(int j) const {
  if (j < coarse_level || j >= depth) throw LengthError("level index out of range");
  return details[static_cast<std::size_t>(j - coarse_level)];
}

std::vector<double> WaveletDecomposition::flatten() const {
  std::vector<double> flat;
  flat.reserve(size());
  flat.insert(flat.end(), scaling.begin(), scaling.end());
  for (const auto& d : details) flat.insert(flat.end(), d.begin(), d.end());
  return flat;
}

WaveletDecomposition WaveletDecomposition::from_flat(std::span<const double> flat,
                                                     int coarse_level) {
  auto out = zeros(dyadic_depth(flat.size()), coarse_level);
  auto it = flat.begin();
  std::copy_n(it, out.scaling.size(), out.scaling.begin());
  it += static_cast<std::ptrdiff_t>(out.scaling.size());
  for (auto& d : out.details) {
    std::copy_n(it, d.size(), d.begin());
    it += static_cast<std::ptrdiff_t>(d.size());
  }
  return out;
}

void WaveletDecomposition::validate() const {
  if (depth < 1 || coarse_level < 0 || coarse_level >= depth) {
    throw StructureError("decomposition levels inconsistent: depth " + std::to_string(depth) +
                         ", coarse level " + std::to_string(coarse_level));
  }
  if (scaling.size() != (std::size_t{1} << coarse_level)) {
    throw StructureError("scaling array has " + std::to_string(scaling.size()) +
                         " entries, expected 2^" + std::to_string(coarse_level));
  }
  if (details.size() != static_cast<std::size_t>(depth - coarse_level)) {
    throw StructureError("expected " + std::to_string(depth - coarse_level) +
                         " detail levels, found " + std::to_string(details.size()));
  }
  for (int j = coarse_level; j < depth; ++j) {
    if (details[static_cast<std::size_t>(j - coarse_level)].size() != (std::size_t{1} << j)) {
      throw StructureError("detail level " + std::to_string(j) + " has wrong length");
    }
  }
}

int dyadic_depth(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw LengthError("signal length " + std::to_string(n) + " is not a power of two");
  }
  int depth = 0;
  while ((std::size_t{1} << depth) < n) ++depth;
  return depth;
}

WaveletDecomposition dwt(std::span<const double> signal, const FilterPair& basis,
                         int coarse_level) {
  const int depth = dyadic_depth(signal.size());
  auto out = WaveletDecomposition::zeros(depth, coarse_level);

  std::vector<double> current(signal.begin(), signal.end());
  std::vector<double> low;
  for (int j = depth - 1; j >= coarse_level; --j) {
    low.assign(current.size() / 2, 0.0);
    analysis_step(current, basis, low, out.level(j));
    current.swap(low);
  }
  out.scaling = std::move(current);
  return out;
}

std::vector<double> idwt(const WaveletDecomposition& decomp, const FilterPair& basis) {
  decomp.validate();
  std::vector<double> current = decomp.scaling;
  std::vector<double> next;
  for (int j = decomp.coarse_level; j < decomp.depth; ++j) {
    next.assign(current.size() * 2, 0.0);
    synthesis_step(current, decomp.level(j), basis, next);
    current.swap(next);
  }
  return current;
}

std::vector<double> rotate(std::span<const double> x, std::ptrdiff_t shift) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  std::vector<double> out(x.size());
  if (n == 0) return out;
  const std::ptrdiff_t s = ((shift % n) + n) % n;
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>((i + s) % n)];
  return out;
}

void shrink_details(WaveletDecomposition& decomp, const ShrinkageRule& rule) {
  for (auto& level : decomp.details) {
    for (double& d : level) d = rule.apply(d);
  }
}

std::vector<double> cycle_spin(std::span<const double> signal, const FilterPair& basis,
                               int coarse_level, const CoefficientOp& op, unsigned threads) {
  const int depth = dyadic_depth(signal.size());
  if (coarse_level < 0 || coarse_level >= depth) {
    throw LengthError("coarse level " + std::to_string(coarse_level) +
                      " out of range for depth " + std::to_string(depth));
  }
  const std::size_t n = signal.size();
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);

  auto run_range = [&](std::size_t first, std::size_t last, std::vector<double>& acc) {
    acc.assign(n, 0.0);
    for (std::size_t s = first; s < last; ++s) {
      auto shifted = rotate(signal, static_cast<std::ptrdiff_t>(s));
      auto decomp = dwt(shifted, basis, coarse_level);
      op(decomp);
      const auto estimate = idwt(decomp, basis);
      for (std::size_t i = 0; i < n; ++i) acc[(i + s) % n] += estimate[i];
    }
  };

  std::vector<std::vector<double>> partial(workers);
  if (workers == 1) {
    run_range(0, n, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = n * w / workers;
      const std::size_t last = n * (w + 1) / workers;
      pool.emplace_back([&, first, last, w] { run_range(first, last, partial[w]); });
    }
  }

  std::vector<double> out(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t i = 0; i < n; ++i) out[i] += acc[i];
  }
  const double inv = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= inv;
  return out;
}

std::vector<double> cycle_spin_denoise(std::span<const double> signal, const FilterPair& basis,
                                       const ShrinkageRule& rule, double threshold,
                                       int coarse_level, unsigned threads) {
  if (!(threshold >= 0.0)) throw std::invalid_argument("threshold must be nonnegative");
  if (threshold == 0.0) {
    return cycle_spin(signal, basis, coarse_level, [](WaveletDecomposition&) {}, threads);
  }
  const auto scaled = rule.with_threshold(threshold);
  return cycle_spin(
      signal, basis, coarse_level,
      [&scaled](WaveletDecomposition& d) { shrink_details(d, scaled); }, threads);
}

}  // namespace wavshrink
