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

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "werner/dense_matrix.hpp"
#include "werner/errors.hpp"
#include "werner/linalg.hpp"
#include "werner/partition.hpp"
#include "werner/pauli.hpp"
#include "werner/werner_state.hpp"

namespace werner {

enum class Scheme { per_string, commuting_class, auto_select };

inline std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::per_string: return "per_string";
    case Scheme::commuting_class: return "commuting_class";
    case Scheme::auto_select: return "auto";
  }
  return "unknown";
}

inline Scheme scheme_from_name(const std::string& name) {
  if (name == "per_string" || name == "per-string") return Scheme::per_string;
  if (name == "commuting_class" || name == "class") {
    return Scheme::commuting_class;
  }
  if (name == "auto") return Scheme::auto_select;
  throw PreconditionError("unknown scheme \"" + name + "\"");
}

/// One weighted product state w·(A ⊗ B) of a certificate.
struct ProductTerm {
  double weight = 0.0;
  DenseMatrix state_a;
  DenseMatrix state_b;
  std::string label;
};

/// Weighted product terms claimed to sum to the Werner state `params`.
struct Decomposition {
  WernerParams params;
  Scheme scheme = Scheme::auto_select;
  double scale = 0.0;
  std::vector<ProductTerm> terms;

  double weight_sum() const noexcept {
    double s = 0.0;
    for (const auto& t : terms) s += t.weight;
    return s;
  }
};

/// Whether constructions reject f outside the scheme's valid interval.
enum class RangeCheck { enforce, skip };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// Per-string components stay positive iff |d·f − 1| ≤ 1.
inline Interval per_string_range(int p) {
  const double d = std::ldexp(1.0, p);
  return {0.0, 2.0 / d};
}

/// Class components stay positive iff s ≤ 1 on the d·f ≥ 1 side and
/// (d − 1)·s ≤ 1 on the sign-flipped side.
inline Interval class_range(int p) {
  const double d = std::ldexp(1.0, p);
  return {(d - 2.0) / (d * (d - 1.0)), 1.0};
}

namespace detail {

/// (1/d)(I + scale·S) for a Hermitian sum S of signed Pauli strings.
inline DenseMatrix identity_plus_scaled(const DenseMatrix& sum, double scale) {
  const std::size_t n = sum.dim();
  const double d = static_cast<double>(n);
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = ((i == j ? 1.0 : 0.0) + scale * sum(i, j)) / d;
    }
  }
  return m;
}

inline void require_range(const WernerParams& w, Interval range,
                          const std::string& scheme) {
  if (!range.contains(w.f)) {
    throw RangeError("f = " + detail::num(w.f) + " is outside the " +
                         scheme + " range [" + detail::num(range.lo) +
                         ", " + detail::num(range.hi) + "] for p = " +
                         std::to_string(w.p),
                     w.f, range.lo, range.hi);
  }
}

inline std::string sign_char(double s) { return s >= 0.0 ? "+" : "-"; }

}  // namespace detail

/// (1/2^p)(I + sign·scale·σ_s). Scales above 1 give a non-positive matrix,
/// which is returned as-is for the verifier to reject.
inline DenseMatrix per_string_component(const PauliIndexString& s, double scale,
                                        int sign) {
  if (s.is_identity()) {
    throw PreconditionError("per_string_component: identity string");
  }
  if (scale < 0.0) throw PreconditionError("per_string_component: scale < 0");
  DenseMatrix sigma = pauli_matrix(s);
  if (sign < 0) sigma *= -1.0;
  return detail::identity_plus_scaled(sigma, scale);
}

/// Two terms per nontrivial string with scale √|d·f − 1|; the B factor takes
/// the opposite sign when d·f < 1.
inline Decomposition per_string_decomposition(
    const WernerParams& w, RangeCheck check = RangeCheck::enforce) {
  if (check == RangeCheck::enforce) {
    detail::require_range(w, per_string_range(w.p), "per_string");
  }
  detail::require_dense_size(w.p, "per_string_decomposition");
  const double d = w.d();
  const double excess = d * w.f - 1.0;
  const double scale = std::sqrt(std::abs(excess));
  const int b_sign = excess >= 0.0 ? 1 : -1;
  const std::uint64_t strings = w.dim() * w.dim();
  const double weight = 1.0 / (2.0 * static_cast<double>(strings - 1));

  Decomposition dec{w, Scheme::per_string, scale, {}};
  dec.terms.reserve(2 * (strings - 1));
  for (std::uint64_t v = 1; v < strings; ++v) {
    const auto s = PauliIndexString::from_value(v, w.p);
    const std::string tag = "per_string:" + s.letter_string() + ":";
    for (int a_sign : {1, -1}) {
      dec.terms.push_back(
          {weight, per_string_component(s, scale, a_sign),
           per_string_component(s, scale, a_sign * b_sign),
           tag + detail::sign_char(a_sign) + detail::sign_char(a_sign * b_sign)});
    }
  }
  return dec;
}

/// Character index on a class's generators: generator j gets (−1)^{bit j}.
struct SignPattern {
  std::uint32_t bits = 0;
};

struct SignedString {
  int sign = 1;
  PauliIndexString string;
};

/// Members of `cls` with the signs of the pattern extended multiplicatively
/// from the generators. Products of generators are formed with exact phase
/// tracking, so the signed set plus I is a group not containing −I.
inline std::vector<SignedString> signed_members(const CommutingClass& cls,
                                                SignPattern eps) {
  const int p = static_cast<int>(cls.generators.size());
  if (p == 0) throw PreconditionError("signed_members: class has no generators");
  std::vector<SignedString> out;
  out.reserve((std::size_t{1} << p) - 1);
  for (std::uint32_t k = 1; k < (1u << p); ++k) {
    PauliOperator acc{PauliIndexString::identity(p), 0};
    for (int j = 0; j < p; ++j) {
      if ((k >> j) & 1u) acc = pauli_product(acc, PauliOperator{cls.generators[j], 0});
    }
    if (acc.quarter_turns & 1) {
      throw PreconditionError("signed_members: generators of class " +
                              cls.id() + " do not commute");
    }
    int sign = acc.quarter_turns == 2 ? -1 : 1;
    if (std::popcount(k & eps.bits) & 1) sign = -sign;
    out.push_back({sign, std::move(acc.string)});
  }
  return out;
}

namespace detail {

inline DenseMatrix signed_class_sum(const CommutingClass& cls, SignPattern eps) {
  const int p = static_cast<int>(cls.generators.size());
  DenseMatrix sum(std::size_t{1} << p);
  for (const auto& m : signed_members(cls, eps)) {
    DenseMatrix sigma = pauli_matrix(m.string);
    if (m.sign < 0) sigma *= -1.0;
    sum += sigma;
  }
  return sum;
}

}  // namespace detail

/// (1/2^p)(I + scale·Σ_g sign_ε(g)·σ_g); a stabilizer projector at scale 1.
inline DenseMatrix class_component(const CommutingClass& cls, SignPattern eps,
                                   double scale) {
  if (scale < 0.0) throw PreconditionError("class_component: scale < 0");
  return detail::identity_plus_scaled(detail::signed_class_sum(cls, eps), scale);
}

/// One term A = B = class_component(cls, ε, s) per class and sign pattern,
/// s = √((d·f − 1)/(d − 1)), weight 1/((d + 1)·d). When d·f < 1 the B factor
/// carries −s instead.
inline Decomposition class_decomposition(const WernerParams& w,
                                         const Partition& part,
                                         RangeCheck check = RangeCheck::enforce) {
  if (check == RangeCheck::enforce) {
    detail::require_range(w, class_range(w.p), "commuting_class");
    const auto validation = validate_partition(part, w.p);
    if (!validation.ok) {
      throw PreconditionError("class_decomposition: invalid partition: " +
                              validation.diagnostics.front());
    }
  }
  detail::require_dense_size(w.p, "class_decomposition");
  const double d = w.d();
  const double excess = d * w.f - 1.0;
  const double scale = std::sqrt(std::abs(excess) / (d - 1.0));
  const double b_scale = excess >= 0.0 ? scale : -scale;
  const double weight = 1.0 / ((d + 1.0) * d);
  const std::uint32_t patterns = 1u << w.p;

  Decomposition dec{w, Scheme::commuting_class, scale, {}};
  dec.terms.reserve(part.classes.size() * patterns);
  for (const auto& cls : part.classes) {
    for (std::uint32_t e = 0; e < patterns; ++e) {
      const DenseMatrix sum = detail::signed_class_sum(cls, SignPattern{e});
      std::string eps;
      for (int j = 0; j < w.p; ++j) eps.push_back((e >> j) & 1u ? '1' : '0');
      DenseMatrix a = detail::identity_plus_scaled(sum, scale);
      DenseMatrix b = excess >= 0.0 ? a : detail::identity_plus_scaled(sum, b_scale);
      dec.terms.push_back({weight, std::move(a), std::move(b),
                           "class:" + cls.id() + ":" + eps +
                               (excess >= 0.0 ? "" : ":flip")});
    }
  }
  return dec;
}

inline Decomposition class_decomposition(const WernerParams& w,
                                         RangeCheck check = RangeCheck::enforce) {
  return class_decomposition(w, build_partition(w.p), check);
}

/// Per-string below f = 1/2^p, commuting-class from 1/2^p upward.
inline Scheme select_scheme(const WernerParams& w) {
  return w.f * w.d() < 1.0 ? Scheme::per_string : Scheme::commuting_class;
}

inline Decomposition decompose_auto(const WernerParams& w) {
  if (w.f < 0.0 || w.f > 1.0) {
    throw RangeError("f = " + detail::num(w.f) +
                         " is outside the separable range [0, 1]: the state is " +
                         (w.f < 0.0 ? "entangled (negative partial transpose)"
                                    : "unphysical"),
                     w.f, 0.0, 1.0);
  }
  return select_scheme(w) == Scheme::per_string ? per_string_decomposition(w)
                                                : class_decomposition(w);
}

inline Decomposition decompose(const WernerParams& w, Scheme scheme) {
  switch (scheme) {
    case Scheme::per_string: return per_string_decomposition(w);
    case Scheme::commuting_class: return class_decomposition(w);
    case Scheme::auto_select: break;
  }
  return decompose_auto(w);
}

/// Closed-form spectrum of a single component at the given scale.
inline Spectrum component_spectrum(Scheme kind, int p, double scale) {
  if (scale < 0.0) throw PreconditionError("component_spectrum: scale < 0");
  const double d = std::ldexp(1.0, p);
  const int n = 1 << p;
  switch (kind) {
    case Scheme::per_string:
      return Spectrum::from_levels(
          {{(1.0 - scale) / d, n / 2}, {(1.0 + scale) / d, n / 2}});
    case Scheme::commuting_class:
      return Spectrum::from_levels({{(1.0 + (d - 1.0) * scale) / d, 1},
                                    {(1.0 - scale) / d, n - 1}});
    case Scheme::auto_select: break;
  }
  throw PreconditionError("component_spectrum: scheme must be concrete");
}

/// Σ_i w_i·A_i ⊗ B_i
inline DenseMatrix reconstruct(const Decomposition& dec) {
  if (dec.terms.empty()) throw PreconditionError("reconstruct: no terms");
  const std::size_t d = dec.terms.front().state_a.dim();
  DenseMatrix out(d * d);
  for (const auto& t : dec.terms) {
    if (t.state_a.dim() != d || t.state_b.dim() != d) {
      throw DimensionError("reconstruct: term \"" + t.label +
                           "\" has mismatched local dimensions");
    }
    add_weighted_kron(out, t.weight, t.state_a, t.state_b);
  }
  return out;
}

}  // namespace werner
