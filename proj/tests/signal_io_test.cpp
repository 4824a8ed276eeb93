// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "support.hpp"
#include "wavshrink/signal_io.hpp"

namespace wavshrink {
namespace {

TEST(ReadSignal, HeaderBlankLinesAndSigns) {
  std::istringstream in("value\n1.5\n\n-2\n+3e-1\n  4  \n");
  const auto file = read_signal(in);
  ASSERT_TRUE(file.header.has_value());
  EXPECT_EQ(*file.header, "value");
  EXPECT_EQ(file.values, (std::vector<double>{1.5, -2.0, 0.3, 4.0}));
}

TEST(ReadSignal, Rejections) {
  std::istringstream three("1\n2\n3\n");
  EXPECT_THROW((void)read_signal(three), LengthError);
  std::istringstream one("1\n");
  EXPECT_THROW((void)read_signal(one), LengthError);
  std::istringstream columns("1,2\n3,4\n");
  EXPECT_THROW((void)read_signal(columns), std::invalid_argument);
  std::istringstream junk("1\nabc\n");
  EXPECT_THROW((void)read_signal(junk), std::invalid_argument);
  EXPECT_THROW((void)read_signal_file("/nonexistent/signal.txt"), std::invalid_argument);
}

TEST(WriteSignal, RoundTripsExactly) {
  testing::Gen gen(7);
  SignalFile file{"x", gen.normals(64, 1e3)};
  file.values[3] = 1e-300;
  file.values[4] = -0.1;
  std::ostringstream out;
  write_signal(out, file);
  std::istringstream in(out.str());
  const auto back = read_signal(in);
  EXPECT_EQ(back.header, file.header);
  EXPECT_EQ(back.values, file.values);
}

TEST(FormatDouble, ShortestForms) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(3.0), "3");
  EXPECT_EQ(format_double(-2.5), "-2.5");
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(ReadPlmTable, ParsesColumns) {
  std::istringstream in("y,x1,x2\n1,2,3\n4,5,6\n7,8,9\n10,11,13\n");
  const auto data = read_plm_table(in);
  ASSERT_EQ(data.y.size(), 4);
  ASSERT_EQ(data.x.cols(), 2);
  EXPECT_EQ(data.y[3], 10.0);
  EXPECT_EQ(data.x(3, 1), 13.0);
}

TEST(ReadPlmTable, Rejections) {
  std::istringstream ragged("1,2\n3,4,5\n");
  EXPECT_THROW((void)read_plm_table(ragged), std::invalid_argument);
  std::istringstream single("1\n2\n");
  EXPECT_THROW((void)read_plm_table(single), std::invalid_argument);
  std::istringstream odd("1,2\n3,4\n5,6\n");
  EXPECT_THROW((void)read_plm_table(odd), LengthError);
  std::istringstream empty("y,x\n");
  EXPECT_THROW((void)read_plm_table(empty), std::invalid_argument);
  std::istringstream wide("1,2,3\n4,5,6\n");
  EXPECT_THROW((void)read_plm_table(wide), std::invalid_argument);
}

}  // namespace
}  // namespace wavshrink
