// Copyright 2026 The Werner Decomposition Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <stdexcept>
#include <string>

namespace werner {

namespace detail {

/// Shortest round-trip decimal text, for messages.
inline std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

/// Operands whose dimensions (or Pauli string lengths) do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input violated a documented precondition (non-Hermitian, non-unitary,
/// unsupported degree, malformed text).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The flip expectation f lies outside the interval an operation accepts.
/// Carries the interval so callers can report it.
class RangeError : public std::out_of_range {
 public:
  RangeError(const std::string& what, double f, double lo, double hi)
      : std::out_of_range(what), f_(f), lo_(lo), hi_(hi) {}

  double f() const noexcept { return f_; }
  double lower() const noexcept { return lo_; }
  double upper() const noexcept { return hi_; }

 private:
  double f_;
  double lo_;
  double hi_;
};

/// The Jacobi eigensolver ran out of sweeps.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace werner
