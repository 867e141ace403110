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

// Reference constructions used as oracles. None of these call into the
// library's Kronecker, product or eigen routines.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "werner/dense_matrix.hpp"

namespace werner::testing {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<C>(n)); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

/// Hard-coded single-qubit Paulis: 0 = I, 1 = X, 2 = Y, 3 = Z.
inline Mat sigma(int k) {
  const C i{0.0, 1.0};
  switch (k) {
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{0.0, -i}, {i, 0.0}};
    case 3: return {{1.0, 0.0}, {0.0, -1.0}};
    default: return {{1.0, 0.0}, {0.0, 1.0}};
  }
}

/// Textbook Kronecker product, left factor most significant.
inline Mat kron_ref(const Mat& a, const Mat& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  Mat m = zeros(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          m[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return m;
}

/// Dense string from base-4 digits, digit 0 leftmost.
inline Mat pauli_ref(const std::vector<int>& digits) {
  Mat m = {{1.0}};
  for (int d : digits) m = kron_ref(m, sigma(d));
  return m;
}

inline Mat mul_ref(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

inline Mat add_ref(const Mat& a, const Mat& b, C wb = 1.0) {
  Mat m = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] += wb * b[i][j];
  return m;
}

inline Mat scale_ref(const Mat& a, C w) {
  Mat m = a;
  for (auto& row : m)
    for (auto& v : row) v *= w;
  return m;
}

inline double norm_ref(const Mat& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (const auto& v : row) s += std::norm(v);
  return std::sqrt(s);
}

inline double commutator_norm(const Mat& a, const Mat& b) {
  return norm_ref(add_ref(mul_ref(a, b), mul_ref(b, a), -1.0));
}

inline double distance(const DenseMatrix& a, const Mat& b) {
  if (a.dim() != b.size()) return INFINITY;
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += std::norm(a(i, j) - b[i][j]);
  return std::sqrt(s);
}

inline DenseMatrix to_dense(const Mat& a) {
  DenseMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i][j];
  return m;
}

/// Eigenvalues of a 2×2 Hermitian matrix from the characteristic polynomial.
inline std::pair<double, double> eig2(const Mat& a) {
  const double t = (a[0][0] + a[1][1]).real();
  const double det = (a[0][0] * a[1][1] - a[0][1] * a[1][0]).real();
  const double disc = std::sqrt(std::max(0.0, t * t / 4.0 - det));
  return {t / 2.0 - disc, t / 2.0 + disc};
}

/// |Φ⁺⟩⟨Φ⁺| with Φ⁺ = (|00⟩ + |11⟩)/√2.
inline Mat phi_plus() {
  Mat m = zeros(4);
  for (int i : {0, 3})
    for (int j : {0, 3}) m[i][j] = 0.5;
  return m;
}

/// Brute-force irreducibility over GF(2): no polynomial of degree 1..deg/2
/// divides `poly`.
inline bool irreducible_ref(std::uint32_t poly) {
  auto degree = [](std::uint32_t x) {
    int d = -1;
    while (x) {
      x >>= 1;
      ++d;
    }
    return d;
  };
  const int deg = degree(poly);
  for (std::uint32_t q = 2; degree(q) <= deg / 2; ++q) {
    std::uint32_t r = poly;
    const int dq = degree(q);
    while (r && degree(r) >= dq) r ^= q << (degree(r) - dq);
    if (r == 0) return false;
  }
  return true;
}

/// Hand-coded p = 1 certificate: six terms of weight 1/6 with components
/// ½(I ± s·σ_i) and the B sign flipped when 2f < 1.
struct HandTerm {
  double weight;
  Mat a;
  Mat b;
};

inline std::vector<HandTerm> hand_p1_decomposition(double f) {
  const double excess = 2.0 * f - 1.0;
  const double s = std::sqrt(std::abs(excess));
  const double flip = excess >= 0.0 ? 1.0 : -1.0;
  std::vector<HandTerm> out;
  for (int i = 1; i <= 3; ++i) {
    for (double e : {1.0, -1.0}) {
      out.push_back({1.0 / 6.0, scale_ref(add_ref(eye(2), sigma(i), e * s), 0.5),
                     scale_ref(add_ref(eye(2), sigma(i), flip * e * s), 0.5)});
    }
  }
  return out;
}

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int digit() { return static_cast<int>(rng_() % 4); }

  std::vector<int> digits(int p) {
    std::vector<int> d(p);
    for (auto& x : d) x = digit();
    return d;
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  Mat hermitian(std::size_t n) {
    std::normal_distribution<double> g;
    Mat m = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = g(rng_);
      for (std::size_t j = i + 1; j < n; ++j) {
        m[i][j] = C{g(rng_), g(rng_)};
        m[j][i] = std::conj(m[i][j]);
      }
    }
    return m;
  }

  /// Random density matrix G·G† / Tr.
  Mat density(std::size_t n) {
    std::normal_distribution<double> g;
    Mat a = zeros(n);
    for (auto& row : a)
      for (auto& v : row) v = C{g(rng_), g(rng_)};
    Mat m = zeros(n);
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) m[i][j] += a[i][k] * std::conj(a[j][k]);
      }
    for (std::size_t i = 0; i < n; ++i) tr += m[i][i].real();
    return scale_ref(m, 1.0 / tr);
  }

  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace werner::testing
