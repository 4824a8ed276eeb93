// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#pragma once

#include <stdexcept>
#include <string>

namespace wavshrink {

/// Signal length is not a power of two, or a level index is out of range.
class LengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A decomposition whose per-level shapes do not describe a dyadic pyramid.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative or bracketing numerical routine failed to produce a result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wavshrink
