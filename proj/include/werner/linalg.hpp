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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "werner/dense_matrix.hpp"
#include "werner/errors.hpp"

namespace werner {

inline constexpr double kClusterTolerance = 1e-8;
inline constexpr double kHermitianInputTolerance = 1e-10;
inline constexpr double kJacobiOffDiagonalTarget = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Eigenvalues with multiplicities, ascending. Adjacent values are further
/// apart than the clustering tolerance.
class Spectrum {
 public:
  struct Level {
    double value = 0.0;
    int multiplicity = 0;
  };

  Spectrum() = default;

  static Spectrum from_values(std::vector<double> values,
                              double tol = kClusterTolerance) {
    std::vector<Level> levels;
    levels.reserve(values.size());
    for (double v : values) levels.push_back({v, 1});
    return from_levels(std::move(levels), tol);
  }

  /// Merges levels whose values agree within `tol`; the merged value is the
  /// multiplicity-weighted mean.
  static Spectrum from_levels(std::vector<Level> levels,
                              double tol = kClusterTolerance) {
    std::sort(levels.begin(), levels.end(),
              [](const Level& a, const Level& b) { return a.value < b.value; });
    Spectrum s;
    s.tol_ = tol;
    double sum = 0.0;
    double last = 0.0;
    for (const auto& l : levels) {
      if (l.multiplicity <= 0) continue;
      if (!s.levels_.empty() && l.value - last <= tol) {
        auto& back = s.levels_.back();
        back.multiplicity += l.multiplicity;
        sum += l.value * l.multiplicity;
        back.value = sum / back.multiplicity;
      } else {
        s.levels_.push_back(l);
        sum = l.value * l.multiplicity;
      }
      last = l.value;
    }
    return s;
  }

  const std::vector<Level>& levels() const noexcept { return levels_; }
  double clustering_tolerance() const noexcept { return tol_; }
  std::size_t size() const noexcept { return levels_.size(); }

  int dimension() const noexcept {
    int n = 0;
    for (const auto& l : levels_) n += l.multiplicity;
    return n;
  }

  double min() const { return levels_.front().value; }
  double max() const { return levels_.back().value; }

  /// Σ multiplicity·value
  double trace() const noexcept {
    double t = 0.0;
    for (const auto& l : levels_) t += l.value * l.multiplicity;
    return t;
  }

 private:
  std::vector<Level> levels_;
  double tol_ = kClusterTolerance;
};

/// Same number of levels, identical multiplicities, values within `tol`.
inline bool spectra_agree(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& la = a.levels()[i];
    const auto& lb = b.levels()[i];
    if (la.multiplicity != lb.multiplicity) return false;
    if (std::abs(la.value - lb.value) > tol) return false;
  }
  return true;
}

/// Largest value gap between two spectra with matching level structure;
/// infinity when the structure differs.
inline double spectrum_distance(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.levels()[i].multiplicity != b.levels()[i].multiplicity) {
      return INFINITY;
    }
    worst = std::max(worst,
                     std::abs(a.levels()[i].value - b.levels()[i].value));
  }
  return worst;
}

struct EigenSystem {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j is the eigenvector of values[j]
  int sweeps = 0;
  double off_diagonal_norm = 0.0;

  std::vector<Complex> vector(std::size_t j) const {
    std::vector<Complex> v(vectors.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, j);
    return v;
  }
};

namespace detail {

inline double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

inline void require_hermitian(const DenseMatrix& a, const char* op) {
  const double defect = hermiticity_defect(a);
  if (defect > kHermitianInputTolerance) {
    throw PreconditionError(std::string(op) +
                            ": matrix is not Hermitian (defect " +
                            detail::num(defect) + ")");
  }
}

}  // namespace detail

/// Cyclic complex Jacobi. Each rotation first removes the phase of a_pq and
/// then applies a real Givens rotation in the (p, q) plane.
inline EigenSystem hermitian_eigensystem(const DenseMatrix& input,
                                         bool want_vectors = true) {
  detail::require_hermitian(input, "hermitian_eigensystem");
  const std::size_t n = input.dim();

  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
    }
  }
  DenseMatrix v = want_vectors ? DenseMatrix::identity(n) : DenseMatrix();

  const double target =
      kJacobiOffDiagonalTarget * std::max(1.0, frobenius_norm(a));
  EigenSystem out;
  double off = detail::off_diagonal_norm(a);
  int sweep = 0;
  while (off >= target) {
    if (sweep == kJacobiMaxSweeps) {
      throw ConvergenceError(
          "Jacobi eigensolver did not converge in " +
              std::to_string(kJacobiMaxSweeps) +
              " sweeps (off-diagonal norm " + detail::num(off) + ")",
          off);
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;  // e^{iφ}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sp = s * std::conj(phase);  // s·e^{-iφ}
        const Complex cp = c * std::conj(phase);  // c·e^{-iφ}

        // Columns: A ← A·G with G = diag(1, e^{-iφ})·R.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - sp * akq;
          a(k, q) = s * akp + cp * akq;
        }
        // Rows: A ← G†·A.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - std::conj(sp) * aqk;
          a(q, k) = s * apk + std::conj(cp) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - sp * vkq;
            v(k, q) = s * vkp + cp * vkq;
          }
        }
      }
    }
    off = detail::off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  out.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.values[j] = a(order[j], order[j]).real();
  if (want_vectors) {
    out.vectors = DenseMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
  }
  out.sweeps = sweep;
  out.off_diagonal_norm = off;
  return out;
}

inline Spectrum hermitian_eigenvalues(const DenseMatrix& a,
                                      double cluster_tol = kClusterTolerance) {
  return Spectrum::from_values(hermitian_eigensystem(a, false).values,
                               cluster_tol);
}

inline double min_eigenvalue(const DenseMatrix& a) {
  return hermitian_eigensystem(a, false).values.front();
}

inline bool is_positive_semidefinite(const DenseMatrix& a, double tol = 1e-9) {
  return min_eigenvalue(a) >= -tol;
}

/// ⟨i,j|M^{T_B}|k,l⟩ = ⟨i,l|M|k,j⟩ with composite index i·dB + j.
inline DenseMatrix partial_transpose_b(const DenseMatrix& m, std::size_t da,
                                       std::size_t db) {
  if (m.dim() != da * db) {
    throw DimensionError("partial_transpose_b: matrix dimension " +
                         std::to_string(m.dim()) + " != " +
                         std::to_string(da) + "*" + std::to_string(db));
  }
  DenseMatrix out(m.dim());
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      for (std::size_t k = 0; k < da; ++k) {
        for (std::size_t l = 0; l < db; ++l) {
          out(i * db + j, k * db + l) = m(i * db + l, k * db + j);
        }
      }
    }
  }
  return out;
}

}  // namespace werner
