// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavshrink {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void DenoiseConfig::validate() const {
  if (const auto* fixed = std::get_if<FixedThreshold>(&threshold)) {
    if (!(fixed->value > 0.0)) throw std::invalid_argument("fixed threshold must be positive");
  }
  if (const auto* known = std::get_if<KnownSigma>(&sigma)) {
    if (!(known->value >= 0.0)) throw std::invalid_argument("known sigma must be nonnegative");
  }
  if (const auto* block = std::get_if<BlockConfig>(&method)) block->validate();
}

double mad_sigma(std::span<const double> finest_details) {
  if (finest_details.empty()) throw std::invalid_argument("MAD of an empty coefficient set");
  std::vector<double> abs_values(finest_details.size());
  std::transform(finest_details.begin(), finest_details.end(), abs_values.begin(),
                 [](double d) { return std::abs(d); });
  const std::size_t mid = abs_values.size() / 2;
  std::nth_element(abs_values.begin(), abs_values.begin() + static_cast<std::ptrdiff_t>(mid),
                   abs_values.end());
  double median = abs_values[mid];
  if (abs_values.size() % 2 == 0) {
    const double lower =
        *std::max_element(abs_values.begin(), abs_values.begin() + static_cast<std::ptrdiff_t>(mid));
    median = 0.5 * (median + lower);
  }
  return median / kMadGaussianScale;
}

double universal_threshold(std::size_t n, double sigma) {
  if (n < 2) throw std::invalid_argument("universal threshold needs n >= 2");
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be nonnegative");
  return sigma * std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

double resolve_sigma(const WaveletDecomposition& decomp, const DenoiseConfig& config) {
  return std::visit(Overloaded{
                        [](const KnownSigma& known) { return known.value; },
                        [&decomp](const MadSigma&) {
                          return mad_sigma(decomp.level(decomp.finest_level()));
                        },
                    },
                    config.sigma);
}

std::vector<double> denoise(std::span<const double> signal, const DenoiseConfig& config) {
  config.validate();
  const auto decomp = dwt(signal, config.basis, config.coarse_level);
  const double sigma = resolve_sigma(decomp, config);

  CoefficientOp op;
  if (const auto* rule = std::get_if<ShrinkageRule>(&config.method)) {
    const double threshold = std::visit(
        Overloaded{
            [&](const UniversalThreshold&) {
              const double t = universal_threshold(signal.size(), sigma);
              // The ridge parameter is dimensionless: use the threshold in noise units.
              if (rule->kind() == ShrinkKind::kLinear && t > 0.0) return t / sigma;
              return t;
            },
            [](const FixedThreshold& fixed) { return fixed.value; },
        },
        config.threshold);
    if (threshold == 0.0) return {signal.begin(), signal.end()};
    op = [scaled = rule->with_threshold(threshold)](WaveletDecomposition& d) {
      shrink_details(d, scaled);
    };
  } else {
    if (sigma == 0.0) return {signal.begin(), signal.end()};
    op = [block = std::get<BlockConfig>(config.method), sigma](WaveletDecomposition& d) {
      d = block_shrink(d, sigma, block);
    };
  }

  if (config.translation_invariant) {
    return cycle_spin(signal, config.basis, config.coarse_level, op, config.threads);
  }
  auto shrunk = decomp;
  op(shrunk);
  return idwt(shrunk, config.basis);
}

std::vector<double> linear_shrink_denoise(std::span<const double> signal, const FilterPair& basis,
                                          double smoothness, double lambda, int coarse_level) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be nonnegative");
  if (!(smoothness > 0.0)) throw std::invalid_argument("smoothness must be positive");
  auto decomp = dwt(signal, basis, coarse_level);
  if (lambda == 0.0) return {signal.begin(), signal.end()};
  for (int j = decomp.coarse_level; j < decomp.depth; ++j) {
    const double factor =
        1.0 / (1.0 + lambda * std::exp2(2.0 * static_cast<double>(j) * smoothness));
    for (double& d : decomp.level(j)) d *= factor;
  }
  return idwt(decomp, basis);
}

}  // namespace wavshrink
