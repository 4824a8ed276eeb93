// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/block.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wavshrink {
namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("block thresholding needs a positive noise scale");
  }
}

std::size_t floor_log(std::size_t n, double divisor) {
  if (n < 2) throw std::invalid_argument("block length needs n >= 2");
  const auto value = static_cast<std::size_t>(std::floor(std::log(static_cast<double>(n)) / divisor));
  return std::max<std::size_t>(value, 1);
}

WaveletDecomposition shrink_all_levels(const WaveletDecomposition& decomp, std::size_t inner,
                                       std::size_t extension, double lambda, double sigma,
                                       TailPolicy tail) {
  decomp.validate();
  WaveletDecomposition out = decomp;
  for (auto& level : out.details) block_shrink_level(level, inner, extension, lambda, sigma, tail);
  return out;
}

}  // namespace

void BlockConfig::validate() const {
  if (block_length && *block_length < 1) throw std::invalid_argument("block length must be >= 1");
  if (lambda && !(*lambda > 0.0)) throw std::invalid_argument("block lambda must be positive");
}

std::string_view scheme_name(BlockScheme scheme) noexcept {
  switch (scheme) {
    case BlockScheme::kBlockJs:
      return "block_js";
    case BlockScheme::kNeighBlock:
      return "neigh_block";
    case BlockScheme::kNeighCoeff:
      return "neigh_coeff";
  }
  return "block_js";
}

std::optional<BlockScheme> parse_block_scheme(std::string_view name) noexcept {
  if (name == "block_js" || name == "blockjs") return BlockScheme::kBlockJs;
  if (name == "neigh_block" || name == "neighblock") return BlockScheme::kNeighBlock;
  if (name == "neigh_coeff" || name == "neighcoeff") return BlockScheme::kNeighCoeff;
  return std::nullopt;
}

double james_stein_factor(double energy, double lambda, double length, double sigma) noexcept {
  if (!(energy > 0.0)) return 0.0;
  return std::max(0.0, (energy - lambda * length * sigma * sigma) / energy);
}

std::size_t default_block_length(std::size_t n) { return floor_log(n, 1.0); }

std::size_t default_neigh_inner_length(std::size_t n) { return floor_log(n, 2.0); }

void block_shrink_level(std::span<double> level, std::size_t inner, std::size_t extension,
                        double lambda, double sigma, TailPolicy tail) {
  const std::size_t m = level.size();
  if (m == 0) return;
  if (inner < 1) throw std::invalid_argument("inner block length must be >= 1");
  const std::size_t window = inner + 2 * extension;

  if (m < window) {
    double energy = 0.0;
    for (double d : level) energy += d * d;
    const double factor = james_stein_factor(energy, lambda, static_cast<double>(m), sigma);
    for (double& d : level) d *= factor;
    return;
  }

  const std::vector<double> noisy(level.begin(), level.end());
  const std::size_t full_blocks = m / inner;
  const bool has_tail = m % inner != 0;
  const std::size_t blocks = full_blocks + ((has_tail && tail == TailPolicy::kAugmented) ? 1 : 0);

  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t start = b * inner;
    double energy = 0.0;
    for (std::size_t w = 0; w < window; ++w) {
      const std::size_t idx = (start + m + w - extension) % m;
      energy += noisy[idx] * noisy[idx];
    }
    const double factor = james_stein_factor(energy, lambda, static_cast<double>(window), sigma);
    const std::size_t stop = std::min(start + inner, m);
    for (std::size_t k = start; k < stop; ++k) level[k] = noisy[k] * factor;
  }
  if (has_tail && tail == TailPolicy::kTruncated) {
    for (std::size_t k = full_blocks * inner; k < m; ++k) level[k] = 0.0;
  }
}

WaveletDecomposition block_js(const WaveletDecomposition& decomp, double sigma,
                              const BlockConfig& config) {
  require_sigma(sigma);
  config.validate();
  const std::size_t length = config.block_length.value_or(default_block_length(decomp.size()));
  const double lambda = config.lambda.value_or(kBlockJsLambda);
  return shrink_all_levels(decomp, length, 0, lambda, sigma, config.tail);
}

WaveletDecomposition neigh_block(const WaveletDecomposition& decomp, double sigma_hat,
                                 const BlockConfig& config) {
  require_sigma(sigma_hat);
  config.validate();
  const std::size_t inner =
      config.block_length.value_or(default_neigh_inner_length(decomp.size()));
  const std::size_t extension = std::max<std::size_t>(1, inner / 2);
  const double lambda = config.lambda.value_or(kBlockJsLambda);
  return shrink_all_levels(decomp, inner, extension, lambda, sigma_hat, config.tail);
}

WaveletDecomposition neigh_coeff(const WaveletDecomposition& decomp, double sigma_hat,
                                 std::size_t n) {
  require_sigma(sigma_hat);
  if (n < 2) throw std::invalid_argument("neigh_coeff needs n >= 2");
  const double lambda = 2.0 / 3.0 * std::log(static_cast<double>(n));
  return shrink_all_levels(decomp, 1, 1, lambda, sigma_hat, TailPolicy::kAugmented);
}

WaveletDecomposition block_shrink(const WaveletDecomposition& decomp, double sigma,
                                  const BlockConfig& config) {
  switch (config.scheme) {
    case BlockScheme::kBlockJs:
      return block_js(decomp, sigma, config);
    case BlockScheme::kNeighBlock:
      return neigh_block(decomp, sigma, config);
    case BlockScheme::kNeighCoeff:
      if (config.lambda) {
        require_sigma(sigma);
        return shrink_all_levels(decomp, 1, 1, *config.lambda, sigma, TailPolicy::kAugmented);
      }
      return neigh_coeff(decomp, sigma, decomp.size());
  }
  throw std::logic_error("unhandled block scheme");
}

}  // namespace wavshrink
