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
#include <cstdint>
#include <string>
#include <vector>

#include "werner/errors.hpp"

namespace werner::gf2 {

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 8;

/// Element of GF(2^p) in the polynomial basis {1, x, …, x^{p−1}}; bit i is
/// the coefficient of x^i.
struct GFElement {
  std::uint32_t bits = 0;

  friend auto operator<=>(const GFElement&, const GFElement&) = default;
};

/// Pinned modulus for each supported degree, bit i = coefficient of x^i.
inline std::uint32_t irreducible_polynomial(int p) {
  static constexpr std::array<std::uint32_t, kMaxDegree + 1> kTable{
      0,
      0b11,         // x + 1
      0b111,        // x^2 + x + 1
      0b1011,       // x^3 + x + 1
      0b10011,      // x^4 + x + 1
      0b100101,     // x^5 + x^2 + 1
      0b1000011,    // x^6 + x + 1
      0b10000011,   // x^7 + x + 1
      0b100011011,  // x^8 + x^4 + x^3 + x + 1
  };
  if (p < kMinDegree || p > kMaxDegree) {
    throw PreconditionError("GF(2^p) unsupported for p = " + std::to_string(p) +
                            " (supported: 1..8)");
  }
  return kTable[p];
}

inline GFElement gf_add(GFElement a, GFElement b) { return {a.bits ^ b.bits}; }

inline GFElement gf_mul(GFElement a, GFElement b, int p) {
  const std::uint32_t modulus = irreducible_polynomial(p);
  std::uint32_t prod = 0;
  for (int i = 0; i < p; ++i) {
    if ((b.bits >> i) & 1u) prod ^= a.bits << i;
  }
  for (int deg = 2 * p - 2; deg >= p; --deg) {
    if ((prod >> deg) & 1u) prod ^= modulus << (deg - p);
  }
  return {prod & ((1u << p) - 1u)};
}

/// Absolute trace a + a² + a⁴ + … + a^{2^{p−1}}, which lies in GF(2).
inline int gf_trace(GFElement a, int p) {
  irreducible_polynomial(p);
  GFElement acc{0};
  GFElement term = a;
  for (int k = 0; k < p; ++k) {
    acc = gf_add(acc, term);
    term = gf_mul(term, term, p);
  }
  if (acc.bits > 1u) {
    throw std::logic_error("gf_trace: result not in GF(2)");
  }
  return static_cast<int>(acc.bits);
}

inline GFElement monomial(int i) { return {1u << i}; }

/// Basis {b*_j} with Tr(x^i · b*_j) = δ_ij, obtained by inverting the trace
/// Gram matrix over GF(2).
inline std::vector<GFElement> dual_basis(int p) {
  irreducible_polynomial(p);
  // Augmented rows [G | I], G_ij = Tr(x^i x^j); row i is a 2p-bit word.
  std::vector<std::uint32_t> rows(p);
  for (int i = 0; i < p; ++i) {
    std::uint32_t row = 0;
    for (int j = 0; j < p; ++j) {
      if (gf_trace(gf_mul(monomial(i), monomial(j), p), p)) row |= 1u << j;
    }
    rows[i] = row | (1u << (p + i));
  }
  for (int col = 0; col < p; ++col) {
    int pivot = -1;
    for (int r = col; r < p; ++r) {
      if ((rows[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("dual_basis: singular trace form");
    std::swap(rows[col], rows[pivot]);
    for (int r = 0; r < p; ++r) {
      if (r != col && ((rows[r] >> col) & 1u)) rows[r] ^= rows[col];
    }
  }
  // Row j of G^{-1} holds the coordinates of b*_j in the polynomial basis.
  std::vector<GFElement> dual(p);
  for (int j = 0; j < p; ++j) dual[j] = {rows[j] >> p};
  return dual;
}

/// Coordinates of b in the trace-dual basis: bit j = Tr(b · x^j).
inline std::uint32_t dual_coordinates(GFElement b, int p) {
  std::uint32_t z = 0;
  for (int j = 0; j < p; ++j) {
    if (gf_trace(gf_mul(b, monomial(j), p), p)) z |= 1u << j;
  }
  return z;
}

}  // namespace werner::gf2
