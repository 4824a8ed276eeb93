// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wavshrink/bench.hpp"
#include "wavshrink/block.hpp"
#include "wavshrink/denoise.hpp"
#include "wavshrink/filters.hpp"
#include "wavshrink/plm.hpp"
#include "wavshrink/shrink.hpp"
#include "wavshrink/signal_io.hpp"

namespace {

using namespace wavshrink;

double parse_positive(const std::string& text, const char* what) {
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size() || !(value >= 0.0)) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
  }
  return value;
}

ThresholdPolicy parse_threshold(const std::string& text) {
  if (text == "universal") return UniversalThreshold{};
  return FixedThreshold{parse_positive(text, "threshold")};
}

DenoiseMethod parse_method(const std::string& spec) {
  const auto colon = spec.find(':');
  if (const auto scheme = parse_block_scheme(spec.substr(0, colon))) {
    BlockConfig block;
    block.scheme = *scheme;
    if (colon != std::string::npos) {
      block.block_length = static_cast<std::size_t>(std::stoul(spec.substr(colon + 1)));
    }
    return block;
  }
  return parse_rule(spec);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  return file;
}

struct DenoiseArgs {
  std::string input;
  std::string output;
  std::string wavelet = "haar";
  std::string rule = "soft";
  std::string threshold = "universal";
  std::string sigma = "mad";
  int j0 = 0;
  bool translation_invariant = false;
  unsigned threads = 1;
};

int run_denoise(const DenoiseArgs& args) {
  auto file = read_signal_file(args.input);
  DenoiseConfig config;
  config.basis = filter_by_name(args.wavelet);
  config.coarse_level = args.j0;
  config.method = parse_method(args.rule);
  config.threshold = parse_threshold(args.threshold);
  if (args.sigma == "mad") {
    config.sigma = MadSigma{};
  } else {
    config.sigma = KnownSigma{parse_positive(args.sigma, "sigma")};
  }
  config.translation_invariant = args.translation_invariant;
  config.threads = args.threads;
  file.values = denoise(file.values, config);
  std::ofstream out_file;
  write_signal(open_output(args.output, out_file), file);
  return 0;
}

struct PlmArgs {
  std::string input;
  std::string output;
  std::string wavelet = "haar";
  std::string lambda = "universal";
  std::string sigma = "qr";
  int j0 = 0;
};

int run_plm(const PlmArgs& args) {
  const auto data = read_plm_file(args.input);
  SigmaPolicy sigma = MadSigma{};
  if (args.sigma != "qr") sigma = KnownSigma{parse_positive(args.sigma, "sigma")};
  const auto fit = fit_plm(data, filter_by_name(args.wavelet), args.j0, sigma,
                           parse_threshold(args.lambda));
  std::ofstream out_file;
  auto& out = open_output(args.output, out_file);
  out << "beta";
  for (const double b : fit.beta_hat) out << ',' << format_double(b);
  out << "\nsigma," << format_double(fit.sigma_hat) << "\nlambda," << format_double(fit.lambda)
      << "\nf_hat\n";
  for (const double f : fit.f_hat) out << format_double(f) << '\n';
  if (fit.rank_deficient) {
    std::cerr << "warning: design is rank deficient; minimum-norm coefficients reported\n";
  }
  return 0;
}

struct BenchArgs {
  std::vector<std::string> signals = test_signal_names();
  std::vector<std::string> methods;
  std::vector<double> snrs = {3.0, 7.0};
  std::size_t n = 512;
  std::size_t reps = 100;
  std::uint64_t seed = 1;
  std::string wavelet = "db4";
  std::string out;
  int j0 = 0;
  unsigned threads = 1;
};

int run_bench(const BenchArgs& args) {
  const auto basis = filter_by_name(args.wavelet);
  std::vector<BenchMethod> methods;
  if (args.methods.empty()) {
    methods = table1_methods(basis, args.j0);
    methods.push_back(method_by_name("identity", basis, args.j0));
  } else {
    for (const auto& name : args.methods) methods.push_back(method_by_name(name, basis, args.j0));
  }
  std::vector<TestSignal> signals;
  for (const auto& name : args.signals) signals.push_back(test_signal(name));

  const auto results = run_mc(methods, signals, args.snrs, args.n, args.reps, args.seed,
                              args.threads);
  std::ofstream out_file;
  write_bench_csv(open_output(args.out, out_file), results);
  int failures = 0;
  for (const auto& r : results) {
    if (r.error) {
      std::cerr << "error: " << r.method << " on " << r.signal << " at snr " << r.snr << ": "
                << *r.error << '\n';
      ++failures;
    }
  }
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavelet shrinkage denoising, partially linear models and Monte Carlo benchmarks"};
  app.require_subcommand(1);

  DenoiseArgs denoise_args;
  auto* denoise_cmd = app.add_subcommand("denoise", "Denoise a single-column signal file");
  denoise_cmd->add_option("--input", denoise_args.input, "Input signal, one value per line")
      ->required()
      ->check(CLI::ExistingFile);
  denoise_cmd->add_option("--output", denoise_args.output, "Output file (default stdout)");
  denoise_cmd->add_option("--wavelet", denoise_args.wavelet, "haar or db1..db8")
      ->capture_default_str();
  denoise_cmd
      ->add_option("--rule", denoise_args.rule,
                   "kind[:lambda[,param]] (hard, soft, firm, garrote, scad, linear, "
                   "charbonnier, perona_malik, weickert, tukey) or block_js|neigh_block|"
                   "neigh_coeff[:L]. The threshold option sets the scale of a term-by-term rule.")
      ->capture_default_str();
  denoise_cmd->add_option("--threshold", denoise_args.threshold, "universal or a positive number")
      ->capture_default_str();
  denoise_cmd->add_option("--sigma", denoise_args.sigma, "mad or a known noise level")
      ->capture_default_str();
  denoise_cmd->add_option("--j0", denoise_args.j0, "Coarsest resolution level")
      ->capture_default_str();
  denoise_cmd
      ->add_option("--translation-invariant", denoise_args.translation_invariant,
                   "Average over all circular shifts (true/false)")
      ->capture_default_str();
  denoise_cmd->add_option("--threads", denoise_args.threads, "Workers for cycle spinning")
      ->capture_default_str();

  PlmArgs plm_args;
  auto* plm_cmd = app.add_subcommand("plm", "Fit a partially linear model y = X beta + f + noise");
  plm_cmd->add_option("--input", plm_args.input, "CSV: y then the covariate columns")
      ->required()
      ->check(CLI::ExistingFile);
  plm_cmd->add_option("--output", plm_args.output, "Output file (default stdout)");
  plm_cmd->add_option("--wavelet", plm_args.wavelet, "haar or db1..db8")->capture_default_str();
  plm_cmd->add_option("--j0", plm_args.j0, "Coarsest resolution level")->capture_default_str();
  plm_cmd->add_option("--lambda", plm_args.lambda, "universal or a positive number")
      ->capture_default_str();
  plm_cmd->add_option("--sigma", plm_args.sigma, "qr (estimate) or a known noise level")
      ->capture_default_str();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Monte Carlo MSE table. Noise sd is sd(signal) / snr (population sd).");
  bench_cmd->add_option("--signals", bench_args.signals, "heavisine,blip,corner,wave")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd
      ->add_option("--methods", bench_args.methods,
                   "Comma list; default is the ten table rules plus identity. Also BlockJS, "
                   "NeighBlock, NeighCoeff")
      ->delimiter(',');
  bench_cmd->add_option("--snr", bench_args.snrs, "Signal-to-noise ratios")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--n", bench_args.n, "Sample size (power of two)")->capture_default_str();
  bench_cmd->add_option("--reps", bench_args.reps, "Replicates per cell")->capture_default_str();
  bench_cmd->add_option("--seed", bench_args.seed, "Base seed")->capture_default_str();
  bench_cmd->add_option("--wavelet", bench_args.wavelet, "haar or db1..db8")->capture_default_str();
  bench_cmd->add_option("--j0", bench_args.j0, "Coarsest resolution level")->capture_default_str();
  bench_cmd->add_option("--out", bench_args.out, "results.csv (default stdout)");
  bench_cmd->add_option("--threads", bench_args.threads, "Parallel cells")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*denoise_cmd) return run_denoise(denoise_args);
    if (*plm_cmd) return run_plm(plm_args);
    if (*bench_cmd) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
