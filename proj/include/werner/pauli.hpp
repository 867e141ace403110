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

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "werner/dense_matrix.hpp"
#include "werner/errors.hpp"

namespace werner {

/// Tensor product of p single-qubit Paulis written as base-4 digits
/// (0=I, 1=X, 2=Y, 3=Z). Digit 0 is the leftmost, most significant factor.
class PauliIndexString {
 public:
  PauliIndexString() = default;

  explicit PauliIndexString(std::vector<std::uint8_t> digits)
      : digits_(std::move(digits)) {
    if (digits_.empty()) {
      throw PreconditionError("Pauli string must have at least one factor");
    }
    for (auto d : digits_) {
      if (d > 3) {
        throw PreconditionError("Pauli digit out of range: " +
                                std::to_string(int{d}));
      }
    }
  }

  static PauliIndexString identity(int p) {
    return PauliIndexString(std::vector<std::uint8_t>(check_length(p), 0));
  }

  /// Inverse of `value()`: the string of length p whose base-4 value is v.
  static PauliIndexString from_value(std::uint64_t v, int p) {
    std::vector<std::uint8_t> digits(check_length(p));
    for (int k = p - 1; k >= 0; --k) {
      digits[k] = static_cast<std::uint8_t>(v & 3u);
      v >>= 2;
    }
    return PauliIndexString(std::move(digits));
  }

  /// Accepts either the digit form ("013") or the letter form ("IXZ").
  static PauliIndexString parse(std::string_view text) {
    if (text.empty()) throw PreconditionError("empty Pauli string");
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    const bool numeric = text.front() >= '0' && text.front() <= '9';
    for (char c : text) {
      if (numeric) {
        if (c < '0' || c > '3') {
          throw PreconditionError("bad Pauli digit '" + std::string(1, c) +
                                  "' in \"" + std::string(text) + "\"");
        }
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
        continue;
      }
      switch (c) {
        case 'I': case 'i': case '_': digits.push_back(0); break;
        case 'X': case 'x': digits.push_back(1); break;
        case 'Y': case 'y': digits.push_back(2); break;
        case 'Z': case 'z': digits.push_back(3); break;
        default:
          throw PreconditionError("bad Pauli letter '" + std::string(1, c) +
                                  "' in \"" + std::string(text) + "\"");
      }
    }
    return PauliIndexString(std::move(digits));
  }

  int length() const noexcept { return static_cast<int>(digits_.size()); }
  std::uint8_t operator[](int k) const { return digits_[k]; }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }

  bool is_identity() const noexcept {
    for (auto d : digits_) {
      if (d != 0) return false;
    }
    return true;
  }

  std::uint64_t value() const noexcept {
    std::uint64_t v = 0;
    for (auto d : digits_) v = (v << 2) | d;
    return v;
  }

  std::string digit_string() const {
    std::string s;
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
  }

  std::string letter_string() const {
    static constexpr std::array<char, 4> kLetters{'I', 'X', 'Y', 'Z'};
    std::string s;
    for (auto d : digits_) s.push_back(kLetters[d]);
    return s;
  }

  friend auto operator<=>(const PauliIndexString&,
                          const PauliIndexString&) = default;

 private:
  static std::size_t check_length(int p) {
    if (p < 1) throw PreconditionError("Pauli string length must be >= 1");
    return static_cast<std::size_t>(p);
  }

  std::vector<std::uint8_t> digits_;
};

/// (x, z) bit pair encoding of a Pauli string; bit k <-> digit k.
struct SymplecticVector {
  int p = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend bool operator==(const SymplecticVector&,
                         const SymplecticVector&) = default;
};

inline SymplecticVector to_symplectic(const PauliIndexString& s) {
  if (s.length() > 64) throw PreconditionError("Pauli string longer than 64");
  SymplecticVector v{s.length(), 0, 0};
  for (int k = 0; k < s.length(); ++k) {
    const auto d = s[k];
    if (d == 1 || d == 2) v.x |= std::uint64_t{1} << k;
    if (d == 2 || d == 3) v.z |= std::uint64_t{1} << k;
  }
  return v;
}

inline PauliIndexString from_symplectic(const SymplecticVector& v) {
  std::vector<std::uint8_t> digits(v.p);
  for (int k = 0; k < v.p; ++k) {
    const bool xb = (v.x >> k) & 1u;
    const bool zb = (v.z >> k) & 1u;
    digits[k] = xb ? (zb ? 2 : 1) : (zb ? 3 : 0);
  }
  return PauliIndexString(std::move(digits));
}

/// Pauli string with a phase i^quarter_turns.
struct PauliOperator {
  PauliIndexString string;
  int quarter_turns = 0;

  std::string to_string() const {
    static constexpr std::array<const char*, 4> kPhase{"+", "+i", "-", "-i"};
    return kPhase[quarter_turns & 3] + string.letter_string();
  }

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
};

namespace detail {

inline void require_same_length(const PauliIndexString& a,
                                const PauliIndexString& b, const char* op) {
  if (a.length() != b.length()) {
    throw DimensionError(std::string(op) + ": Pauli strings of length " +
                         std::to_string(a.length()) + " and " +
                         std::to_string(b.length()));
  }
}

inline DenseMatrix single_qubit_pauli(std::uint8_t d) {
  const Complex i{0.0, 1.0};
  DenseMatrix m(2);
  switch (d) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -i; m(1, 0) = i; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
  }
  return m;
}

}  // namespace detail

inline DenseMatrix pauli_matrix(const PauliIndexString& s) {
  DenseMatrix m = detail::single_qubit_pauli(s[0]);
  for (int k = 1; k < s.length(); ++k) {
    m = kron(m, detail::single_qubit_pauli(s[k]));
  }
  return m;
}

inline DenseMatrix pauli_matrix(const PauliOperator& op) {
  static constexpr std::array<Complex, 4> kPhase{
      Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
  return pauli_matrix(op.string) * kPhase[op.quarter_turns & 3];
}

/// Exact product a·b, phases tracked as quarter turns.
inline PauliOperator pauli_product(const PauliOperator& a,
                                   const PauliOperator& b) {
  detail::require_same_length(a.string, b.string, "pauli_product");
  std::vector<std::uint8_t> digits(a.string.length());
  int turns = a.quarter_turns + b.quarter_turns;
  for (int k = 0; k < a.string.length(); ++k) {
    const int da = a.string[k];
    const int db = b.string[k];
    if (da == 0 || db == 0 || da == db) {
      digits[k] = static_cast<std::uint8_t>(da == db ? 0 : da + db);
      continue;
    }
    digits[k] = static_cast<std::uint8_t>(6 - da - db);
    // XY = iZ and cyclic; the reversed order picks up -i.
    turns += ((db - da + 3) % 3 == 1) ? 1 : 3;
  }
  return PauliOperator{PauliIndexString(std::move(digits)), turns & 3};
}

inline PauliOperator pauli_product(const PauliIndexString& a,
                                   const PauliIndexString& b) {
  return pauli_product(PauliOperator{a, 0}, PauliOperator{b, 0});
}

inline bool commutes(const SymplecticVector& a, const SymplecticVector& b) {
  if (a.p != b.p) throw DimensionError("commutes: length mismatch");
  return ((std::popcount(a.x & b.z) + std::popcount(b.x & a.z)) & 1) == 0;
}

inline bool commutes(const PauliIndexString& a, const PauliIndexString& b) {
  detail::require_same_length(a, b, "commutes");
  return commutes(to_symplectic(a), to_symplectic(b));
}

/// Number of Y factors; σ_s^T = (-1)^{y_count(s)} σ_s.
inline int y_count(const PauliIndexString& s) {
  int n = 0;
  for (auto d : s.digits()) n += (d == 2);
  return n;
}

/// Calls fn(s) for each of the 4^p strings in ascending base-4 order.
template <typename Fn>
void for_each_pauli_string(int p, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << (2 * p);
  for (std::uint64_t v = 0; v < count; ++v) {
    fn(PauliIndexString::from_value(v, p));
  }
}

/// Nonzero structure of σ_s: row r has its single entry at column r ^ flip.
struct PauliMonomial {
  std::uint64_t flip = 0;
  std::uint64_t sign_mask = 0;
  int y_factors = 0;
  int p = 0;

  static PauliMonomial of(const PauliIndexString& s) {
    PauliMonomial m;
    m.p = s.length();
    for (int k = 0; k < m.p; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << (m.p - 1 - k);
      const auto d = s[k];
      if (d == 1 || d == 2) m.flip |= bit;
      if (d == 2 || d == 3) m.sign_mask |= bit;
      if (d == 2) ++m.y_factors;
    }
    return m;
  }

  std::uint64_t column(std::uint64_t row) const noexcept { return row ^ flip; }

  /// Entry at (row, column(row)).
  Complex value(std::uint64_t row) const noexcept {
    // Y = i·X·Z, so each Y contributes a factor i and Z-type signs come
    // from the column bit.
    const std::uint64_t col = row ^ flip;
    int turns = y_factors;
    if (std::popcount(col & sign_mask) & 1) turns += 2;
    static constexpr std::array<Complex, 4> kPhase{
        Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
    return kPhase[turns & 3];
  }
};

}  // namespace werner
