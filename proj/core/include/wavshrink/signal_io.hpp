// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wavshrink/plm.hpp"

namespace wavshrink {

/// A single-column signal file. A non-numeric first line is kept as a header
/// and written back out.
struct SignalFile {
  std::optional<std::string> header;
  std::vector<double> values;
};

/// Throws std::invalid_argument on malformed or multi-column input and
/// LengthError when the length is not a power of two.
[[nodiscard]] SignalFile read_signal(std::istream& in);
[[nodiscard]] SignalFile read_signal_file(const std::string& path);
void write_signal(std::ostream& out, const SignalFile& signal);

/// CSV with y in the first column and the covariates after it.
[[nodiscard]] PlmData read_plm_table(std::istream& in);
[[nodiscard]] PlmData read_plm_file(const std::string& path);

/// Shortest round-trip decimal form.
[[nodiscard]] std::string format_double(double value);

}  // namespace wavshrink
