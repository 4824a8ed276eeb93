// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include "wavshrink/signal_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "wavshrink/dwt.hpp"
#include "wavshrink/errors.hpp"

namespace wavshrink {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    return std::nullopt;
  }
  return value;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

}  // namespace

SignalFile read_signal(std::istream& in) {
  SignalFile out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    const auto fields = split_fields(text);
    if (fields.size() != 1) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected a single column, found " +
                                  std::to_string(fields.size()));
    }
    const auto value = parse_number(fields.front());
    if (!value) {
      if (out.values.empty() && !out.header) {
        out.header = std::string(text);
        continue;
      }
      throw std::invalid_argument("line " + std::to_string(line_no) + ": '" + std::string(text) +
                                  "' is not a number");
    }
    out.values.push_back(*value);
  }
  if (!is_power_of_two(out.values.size()) || out.values.size() < 2) {
    throw LengthError("signal length " + std::to_string(out.values.size()) +
                      " is not a power of two >= 2");
  }
  return out;
}

SignalFile read_signal_file(const std::string& path) {
  auto in = open(path);
  return read_signal(in);
}

void write_signal(std::ostream& out, const SignalFile& signal) {
  if (signal.header) out << *signal.header << '\n';
  for (const double v : signal.values) out << format_double(v) << '\n';
}

PlmData read_plm_table(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    const auto fields = split_fields(text);
    std::vector<double> row;
    row.reserve(fields.size());
    bool numeric = true;
    for (const auto field : fields) {
      const auto value = parse_number(field);
      if (!value) {
        numeric = false;
        break;
      }
      row.push_back(*value);
    }
    if (!numeric) {
      if (rows.empty() && !header_seen) {
        header_seen = true;
        continue;
      }
      throw std::invalid_argument("line " + std::to_string(line_no) + ": non-numeric field");
    }
    if (row.size() < 2) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": need y followed by at least one covariate");
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(rows.front().size()) + " columns");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("PLM table is empty");
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(rows.front().size()) - 1;
  PlmData data;
  data.y.resize(n);
  data.x.resize(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    data.y[i] = row[0];
    for (Eigen::Index c = 0; c < p; ++c) data.x(i, c) = row[static_cast<std::size_t>(c) + 1];
  }
  data.validate();
  return data;
}

PlmData read_plm_file(const std::string& path) {
  auto in = open(path);
  return read_plm_table(in);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  std::array<char, 32> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buffer.data(), ptr);
}

}  // namespace wavshrink
