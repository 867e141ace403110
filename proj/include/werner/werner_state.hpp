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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "werner/dense_matrix.hpp"
#include "werner/errors.hpp"
#include "werner/linalg.hpp"
#include "werner/pauli.hpp"

namespace werner {

/// Largest p for which dense d²×d² operators are built.
inline constexpr int kMaxDenseP = 6;

/// Werner state on (C^d)⊗(C^d), d = 2^p, labelled by f = Tr(ρ·P).
struct WernerParams {
  int p = 1;
  double f = 0.0;

  WernerParams() = default;
  WernerParams(int p_, double f_) : p(p_), f(f_) {
    if (p < 1 || p > 30) {
      throw PreconditionError("p must be in [1, 30], got " + std::to_string(p));
    }
  }

  std::size_t dim() const noexcept { return std::size_t{1} << p; }
  double d() const noexcept { return static_cast<double>(dim()); }

  bool is_physical() const noexcept { return f >= -1.0 && f <= 1.0; }
};

namespace detail {

inline void require_physical(const WernerParams& w, const char* op) {
  if (!w.is_physical()) {
    throw RangeError(std::string(op) + ": f = " + detail::num(w.f) +
                         " is outside the physical range [-1, 1]",
                     w.f, -1.0, 1.0);
  }
}

inline void require_dense_size(int p, const char* op) {
  if (p > kMaxDenseP) {
    throw PreconditionError(std::string(op) + ": p = " + std::to_string(p) +
                            " exceeds the dense limit " +
                            std::to_string(kMaxDenseP));
  }
}

inline std::size_t swap_index(std::size_t r, std::size_t d) {
  return (r % d) * d + r / d;
}

}  // namespace detail

/// Swap operator P|i⟩|j⟩ = |j⟩|i⟩ on (C^d)⊗(C^d).
inline DenseMatrix flip_operator(std::size_t d) {
  if (d == 0 || (d & (d - 1)) != 0) {
    throw PreconditionError("flip_operator: d = " + std::to_string(d) +
                            " is not a power of two");
  }
  DenseMatrix m(d * d);
  for (std::size_t r = 0; r < d * d; ++r) m(detail::swap_index(r, d), r) = 1.0;
  return m;
}

/// [(d − f)·I + (d·f − 1)·P] / (d³ − d)
inline DenseMatrix werner_dense(const WernerParams& w) {
  detail::require_physical(w, "werner_dense");
  detail::require_dense_size(w.p, "werner_dense");
  const std::size_t n = w.dim();
  const double d = w.d();
  const double norm = d * d * d - d;
  const double diag = (d - w.f) / norm;
  const double flip = (d * w.f - 1.0) / norm;
  DenseMatrix m(n * n);
  for (std::size_t r = 0; r < n * n; ++r) {
    m(r, r) += diag;
    m(detail::swap_index(r, n), r) += flip;
  }
  return m;
}

/// Flip expectation Tr(ρ·P).
inline double extract_f(const DenseMatrix& rho, int p) {
  const std::size_t d = std::size_t{1} << p;
  if (rho.dim() != d * d) {
    throw DimensionError("extract_f: expected dimension " +
                         std::to_string(d * d) + ", got " +
                         std::to_string(rho.dim()));
  }
  Complex t{};
  for (std::size_t r = 0; r < d * d; ++r) t += rho(r, detail::swap_index(r, d));
  return t.real();
}

/// Coefficients a[r] of ρ = Σ_r a[r]·σ_r⊗σ_r, r in base-4 order.
struct SpinorCoefficients {
  int p = 1;
  std::vector<double> a;
};

inline SpinorCoefficients spinor_coefficients(const WernerParams& w) {
  if (w.p > 12) throw PreconditionError("spinor_coefficients: p > 12");
  const double d = w.d();
  const double d2 = d * d;
  SpinorCoefficients c{w.p, std::vector<double>(std::size_t{1} << (2 * w.p))};
  c.a[0] = 1.0 / d2;
  const double rest = (d * w.f - 1.0) / (d2 * d2 - d2);
  for (std::size_t r = 1; r < c.a.size(); ++r) c.a[r] = rest;
  return c;
}

namespace detail {

/// Σ_s coeff(s)·σ_s⊗σ_s over all 4^p strings, built from the monomial
/// structure of each σ_s.
template <typename Coeff>
DenseMatrix spinor_sum(int p, Coeff&& coeff) {
  const std::size_t d = std::size_t{1} << p;
  DenseMatrix m(d * d);
  for_each_pauli_string(p, [&](const PauliIndexString& s) {
    const double c = coeff(s);
    if (c == 0.0) return;
    const auto mono = PauliMonomial::of(s);
    for (std::size_t ra = 0; ra < d; ++ra) {
      const Complex va = mono.value(ra);
      const std::size_t ca = mono.column(ra);
      for (std::size_t rb = 0; rb < d; ++rb) {
        m(ra * d + rb, ca * d + mono.column(rb)) += c * va * mono.value(rb);
      }
    }
  });
  return m;
}

}  // namespace detail

/// Werner state assembled in the σ_s⊗σ_s basis.
inline DenseMatrix werner_spinor(const WernerParams& w) {
  detail::require_physical(w, "werner_spinor");
  detail::require_dense_size(w.p, "werner_spinor");
  const double d = w.d();
  const double pre = 1.0 / (d * d * d - d);
  const double ident = pre * (d - w.f);
  const double each = pre * (d * w.f - 1.0) / d;
  return detail::spinor_sum(w.p, [&](const PauliIndexString& s) {
    return s.is_identity() ? ident + each : each;
  });
}

/// Partial transpose on B assembled in the spinor basis; each σ_s⊗σ_s term
/// carries (−1)^{y_count(s)}.
inline DenseMatrix werner_pt(const WernerParams& w) {
  detail::require_physical(w, "werner_pt");
  detail::require_dense_size(w.p, "werner_pt");
  const double d = w.d();
  const double pre = 1.0 / (d * d * d - d);
  const double ident = pre * (d - w.f);
  const double each = pre * (d * w.f - 1.0) / d;
  return detail::spinor_sum(w.p, [&](const PauliIndexString& s) {
    const double sign = (y_count(s) & 1) ? -1.0 : 1.0;
    return s.is_identity() ? ident + each : sign * each;
  });
}

/// 4×4 kernels of the eigenvalue transform λ = (H·M)^{⊗p}·a.
struct TransformMatrices {
  std::array<std::array<int, 4>, 4> h;
  std::array<std::array<int, 4>, 4> m;
};

inline TransformMatrices transform_matrices() {
  return TransformMatrices{
      {{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}},
      {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}}};
}

/// The 4^p eigenvalues obtained by applying H·M along every base-4 axis of
/// the coefficient vector. Row patterns of H·M are the joint eigenvalues of
/// {XX, YY, ZZ} on the four Bell states.
inline std::vector<double> transform_eigenvalues(const WernerParams& w) {
  const auto tm = transform_matrices();
  std::array<std::array<double, 4>, 4> kernel{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) kernel[i][j] += tm.h[i][k] * tm.m[k][j];
    }
  }
  std::vector<double> x = spinor_coefficients(w).a;
  std::vector<double> y(x.size());
  std::size_t stride = 1;
  for (int axis = 0; axis < w.p; ++axis, stride *= 4) {
    for (std::size_t base = 0; base < x.size(); ++base) {
      if ((base / stride) % 4 != 0) continue;
      std::array<double, 4> in{};
      for (int j = 0; j < 4; ++j) in[j] = x[base + j * stride];
      for (int i = 0; i < 4; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += kernel[i][j] * in[j];
        y[base + i * stride] = acc;
      }
    }
    x.swap(y);
  }
  return x;
}

inline Spectrum spectrum_via_transform(const WernerParams& w) {
  return Spectrum::from_values(transform_eigenvalues(w));
}

/// Antisymmetric subspace: (1 − f)/(d(d − 1)), multiplicity d(d − 1)/2.
/// Symmetric subspace: (1 + f)/(d(d + 1)), multiplicity d(d + 1)/2.
inline Spectrum spectrum_closed_form(const WernerParams& w) {
  const double d = w.d();
  const int n = static_cast<int>(w.dim());
  return Spectrum::from_levels({{(1.0 - w.f) / (d * (d - 1.0)), n * (n - 1) / 2},
                                {(1.0 + w.f) / (d * (d + 1.0)), n * (n + 1) / 2}});
}

/// Maximally entangled direction: f/d, once. Its complement:
/// (d − f)/(d(d² − 1)), multiplicity d² − 1.
inline Spectrum pt_spectrum_closed_form(const WernerParams& w) {
  const double d = w.d();
  const int n = static_cast<int>(w.dim());
  return Spectrum::from_levels(
      {{w.f / d, 1}, {(d - w.f) / (d * (d * d - 1.0)), n * n - 1}});
}

inline double min_pt_eigenvalue(const WernerParams& w) {
  return pt_spectrum_closed_form(w).min();
}

inline constexpr double kPptTolerance = 1e-9;

inline bool ppt_check(const WernerParams& w) {
  detail::require_physical(w, "ppt_check");
  return min_pt_eigenvalue(w) >= -kPptTolerance;
}

/// Haar-distributed unitary from a seeded complex Gaussian matrix,
/// orthonormalized column by column (modified Gram–Schmidt, which leaves a
/// positive real diagonal in the triangular factor).
inline DenseMatrix random_unitary(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix u(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      u(i, j) = Complex{re, im};
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj{};
      for (std::size_t i = 0; i < d; ++i) proj += std::conj(u(i, k)) * u(i, j);
      for (std::size_t i = 0; i < d; ++i) u(i, j) -= proj * u(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm += std::norm(u(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < d; ++i) u(i, j) /= norm;
  }
  return u;
}

inline constexpr double kUnitaryTolerance = 1e-10;

/// ‖(U⊗U)ρ(U⊗U)† − ρ‖_F
inline double invariance_residual(const DenseMatrix& rho, const DenseMatrix& u) {
  if (u.dim() * u.dim() != rho.dim()) {
    throw DimensionError("invariance_residual: dim(U)^2 = " +
                         std::to_string(u.dim() * u.dim()) +
                         " but dim(rho) = " + std::to_string(rho.dim()));
  }
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTolerance) {
    throw PreconditionError("invariance_residual: U is not unitary (defect " +
                            detail::num(defect) + ")");
  }
  const DenseMatrix uu = kron(u, u);
  return frobenius_distance(uu * rho * adjoint(uu), rho);
}

}  // namespace werner
