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
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "werner/dense_matrix.hpp"
#include "werner/gf2.hpp"
#include "werner/pauli.hpp"

namespace werner {

/// 2^p − 1 pairwise-commuting nontrivial strings; together with the
/// identity they form a group of order 2^p (modulo phases).
struct CommutingClass {
  std::optional<std::uint32_t> slope;  // empty for the class at infinity
  std::vector<PauliIndexString> members;     // ascending base-4 value
  std::vector<PauliIndexString> generators;  // p independent members

  std::string id() const {
    return slope ? std::to_string(*slope) : std::string("inf");
  }
};

struct Partition {
  int p = 1;
  std::vector<CommutingClass> classes;
};

struct PartitionValidation {
  bool ok = true;
  std::vector<std::string> diagnostics;

  void fail(std::string message) {
    ok = false;
    diagnostics.push_back(std::move(message));
  }
};

namespace detail {

inline PauliIndexString string_from_bits(std::uint32_t x, std::uint32_t z,
                                         int p) {
  return from_symplectic(SymplecticVector{p, x, z});
}

}  // namespace detail

/// Desarguesian spread of F_2^{2p}. The class at infinity holds the strings
/// with zero x-part; the class of slope λ holds (a, λ·a) for a ≠ 0, with a in
/// the polynomial basis and λ·a in the trace-dual basis, so that the
/// symplectic form becomes Tr(a·b' + a'·b) and vanishes inside each class.
inline Partition build_partition(int p) {
  gf2::irreducible_polynomial(p);
  const std::uint32_t q = 1u << p;
  Partition part;
  part.p = p;
  part.classes.reserve(q + 1);

  CommutingClass inf;
  for (std::uint32_t z = 1; z < q; ++z) {
    inf.members.push_back(detail::string_from_bits(0, z, p));
  }
  for (int j = 0; j < p; ++j) {
    inf.generators.push_back(detail::string_from_bits(0, 1u << j, p));
  }
  part.classes.push_back(std::move(inf));

  for (std::uint32_t lambda = 0; lambda < q; ++lambda) {
    CommutingClass cls;
    cls.slope = lambda;
    auto point = [&](std::uint32_t a) {
      const auto b = gf2::gf_mul({lambda}, {a}, p);
      return detail::string_from_bits(a, gf2::dual_coordinates(b, p), p);
    };
    for (std::uint32_t a = 1; a < q; ++a) cls.members.push_back(point(a));
    for (int i = 0; i < p; ++i) cls.generators.push_back(point(1u << i));
    part.classes.push_back(std::move(cls));
  }

  for (auto& cls : part.classes) {
    std::sort(cls.members.begin(), cls.members.end());
  }
  return part;
}

/// Full structural check. Dense commutators are cross-checked for p ≤ 3.
inline PartitionValidation validate_partition(const Partition& part, int p) {
  PartitionValidation v;
  const std::size_t q = std::size_t{1} << p;
  if (part.p != p) {
    v.fail("partition built for p = " + std::to_string(part.p) +
           ", validated for p = " + std::to_string(p));
  }
  if (part.classes.size() != q + 1) {
    v.fail("expected " + std::to_string(q + 1) + " classes, found " +
           std::to_string(part.classes.size()));
  }

  std::set<PauliIndexString> seen;
  for (const auto& cls : part.classes) {
    const std::string tag = "class " + cls.id() + ": ";
    if (cls.members.size() != q - 1) {
      v.fail(tag + "has " + std::to_string(cls.members.size()) +
             " members, expected " + std::to_string(q - 1));
    }
    bool lengths_ok = true;
    for (const auto& s : cls.members) {
      if (s.length() != p) {
        v.fail(tag + s.digit_string() + " has the wrong length");
        lengths_ok = false;
        continue;
      }
      if (s.is_identity()) v.fail(tag + "contains the identity");
      if (!seen.insert(s).second) {
        v.fail(tag + s.letter_string() + " appears in more than one class");
      }
    }
    if (!lengths_ok) continue;

    const std::set<PauliIndexString> member_set(cls.members.begin(),
                                                cls.members.end());
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
        const auto& a = cls.members[i];
        const auto& b = cls.members[j];
        if (!commutes(a, b)) {
          v.fail(tag + a.letter_string() + " and " + b.letter_string() +
                 " anticommute");
          continue;
        }
        if (p <= 3) {
          const DenseMatrix ma = pauli_matrix(a);
          const DenseMatrix mb = pauli_matrix(b);
          if (frobenius_distance(ma * mb, mb * ma) >= 1e-12) {
            v.fail(tag + a.letter_string() + " and " + b.letter_string() +
                   " fail the dense commutator check");
          }
        }
        const auto prod = pauli_product(a, b).string;
        if (!prod.is_identity() && !member_set.contains(prod)) {
          v.fail(tag + "not closed: " + a.letter_string() + "·" +
                 b.letter_string() + " = " + prod.letter_string());
        }
      }
    }

    // Generators must be members and span the class.
    if (cls.generators.size() != static_cast<std::size_t>(p)) {
      v.fail(tag + "has " + std::to_string(cls.generators.size()) +
             " generators, expected " + std::to_string(p));
      continue;
    }
    std::set<PauliIndexString> span;
    for (std::uint32_t k = 1; k < q; ++k) {
      auto acc = PauliIndexString::identity(p);
      for (int j = 0; j < p; ++j) {
        if ((k >> j) & 1u) acc = pauli_product(acc, cls.generators[j]).string;
      }
      span.insert(acc);
    }
    if (span != member_set) {
      v.fail(tag + "generators do not generate the class");
    }
  }

  if (seen.size() != q * q - 1) {
    v.fail("coverage: " + std::to_string(seen.size()) + " of " +
           std::to_string(q * q - 1) + " nontrivial strings covered");
  }
  return v;
}

/// Renders one class per line as space-separated letter strings.
inline std::string partition_to_text(const Partition& part) {
  std::string out;
  for (const auto& cls : part.classes) {
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      if (i) out += ' ';
      out += cls.members[i].letter_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace werner
