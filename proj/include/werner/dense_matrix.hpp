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
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "werner/errors.hpp"

namespace werner {

using Complex = std::complex<double>;

/// Square complex matrix, row-major storage.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static DenseMatrix identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static DenseMatrix diagonal(const std::vector<double>& values) {
    DenseMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  const std::vector<Complex>& data() const noexcept { return data_; }
  std::vector<Complex>& data() noexcept { return data_; }

  DenseMatrix& operator+=(const DenseMatrix& other) {
    require_same_dim(other, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }

  DenseMatrix& operator-=(const DenseMatrix& other) {
    require_same_dim(other, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }

  DenseMatrix& operator*=(Complex scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    a += b;
    return a;
  }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    a -= b;
    return a;
  }
  friend DenseMatrix operator*(DenseMatrix a, Complex s) {
    a *= s;
    return a;
  }
  friend DenseMatrix operator*(Complex s, DenseMatrix a) {
    a *= s;
    return a;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    a.require_same_dim(b, "matrix product");
    const std::size_t n = a.dim_;
    DenseMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        const Complex* brow = &b.data_[k * n];
        Complex* crow = &c.data_[i * n];
        for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
      }
    }
    return c;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  void require_same_dim(const DenseMatrix& other, const char* op) const {
    if (other.dim_ != dim_) {
      throw DimensionError(std::string(op) + ": dimension mismatch (" +
                           std::to_string(dim_) + " vs " +
                           std::to_string(other.dim_) + ")");
    }
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  DenseMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

/// out += weight * (a ⊗ b), without materializing the Kronecker product.
inline void add_weighted_kron(DenseMatrix& out, double weight,
                              const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (out.dim() != na * nb) {
    throw DimensionError("add_weighted_kron: target has dimension " +
                         std::to_string(out.dim()) + ", expected " +
                         std::to_string(na * nb));
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = weight * a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k) {
        Complex* row = &out(i * nb + k, j * nb);
        for (std::size_t l = 0; l < nb; ++l) row[l] += aij * b(k, l);
      }
    }
  }
}

inline DenseMatrix adjoint(const DenseMatrix& a) {
  DenseMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

inline DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

inline Complex trace(const DenseMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

inline double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

inline double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("frobenius_distance: dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    s += std::norm(a.data()[i] - b.data()[i]);
  }
  return std::sqrt(s);
}

/// Largest entrywise deviation |A_ij - conj(A_ji)|.
inline double hermiticity_defect(const DenseMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

inline bool is_hermitian(const DenseMatrix& a, double tol = 1e-12) {
  return hermiticity_defect(a) <= tol;
}

/// ‖A†A − I‖_F
inline double unitarity_defect(const DenseMatrix& u) {
  return frobenius_distance(adjoint(u) * u, DenseMatrix::identity(u.dim()));
}

/// |ψ⟩⟨ψ|
inline DenseMatrix outer_product(const std::vector<Complex>& psi) {
  DenseMatrix out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = 0; j < psi.size(); ++j) {
      out(i, j) = psi[i] * std::conj(psi[j]);
    }
  }
  return out;
}

}  // namespace werner
