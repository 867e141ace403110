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

#include <gtest/gtest.h>

#include <bit>

#include "test_support.hpp"
#include "werner/errors.hpp"
#include "werner/gf2.hpp"

namespace werner::gf2 {
namespace {

TEST(Modulus, IrreducibleForEverySupportedDegree) {
  for (int p = kMinDegree; p <= kMaxDegree; ++p) {
    const std::uint32_t poly = irreducible_polynomial(p);
    EXPECT_EQ(std::bit_width(poly), p + 1);
    EXPECT_TRUE(testing::irreducible_ref(poly)) << p;
  }
  EXPECT_FALSE(testing::irreducible_ref(0b101));  // (x + 1)^2
  EXPECT_THROW(irreducible_polynomial(0), PreconditionError);
  EXPECT_THROW(irreducible_polynomial(9), PreconditionError);
}

TEST(Mul, Examples) {
  EXPECT_EQ(gf_mul({0b10}, {0b10}, 2).bits, 0b11u);
  EXPECT_EQ(gf_mul(gf_mul({0b10}, {0b10}, 3), {0b10}, 3).bits, 0b011u);
  for (int p = 1; p <= 8; ++p) {
    for (std::uint32_t a = 0; a < (1u << p); ++a) {
      EXPECT_EQ(gf_mul({a}, {1}, p).bits, a);
    }
  }
}

TEST(Mul, FieldAxiomsExhaustive) {
  for (int p = 1; p <= 4; ++p) {
    const std::uint32_t q = 1u << p;
    for (std::uint32_t a = 0; a < q; ++a) {
      bool has_inverse = a == 0;
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(gf_mul({a}, {b}, p), gf_mul({b}, {a}, p));
        if (gf_mul({a}, {b}, p).bits == 1u) has_inverse = true;
        for (std::uint32_t c = 0; c < q; ++c) {
          EXPECT_EQ(gf_mul({a}, gf_add({b}, {c}), p),
                    gf_add(gf_mul({a}, {b}, p), gf_mul({a}, {c}, p)));
          EXPECT_EQ(gf_mul(gf_mul({a}, {b}, p), {c}, p),
                    gf_mul({a}, gf_mul({b}, {c}, p), p));
        }
      }
      EXPECT_TRUE(has_inverse) << "p=" << p << " a=" << a;
    }
  }
}

TEST(Trace, Examples) {
  EXPECT_EQ(gf_trace({0}, 3), 0);
  EXPECT_EQ(gf_trace({0b10}, 2), 1);
  EXPECT_EQ(gf_trace({1}, 1), 1);
  EXPECT_THROW(gf_trace({1}, 12), PreconditionError);
}

TEST(Trace, AdditiveAndBalancedExhaustive) {
  for (int p = 1; p <= 4; ++p) {
    const std::uint32_t q = 1u << p;
    int ones = 0;
    for (std::uint32_t a = 0; a < q; ++a) {
      ones += gf_trace({a}, p);
      EXPECT_EQ(gf_trace(gf_mul({a}, {a}, p), p), gf_trace({a}, p));
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(gf_trace(gf_add({a}, {b}), p), gf_trace({a}, p) ^ gf_trace({b}, p));
      }
    }
    EXPECT_EQ(ones, static_cast<int>(q / 2));
  }
}

TEST(DualBasis, SingleBit) {
  const auto d = dual_basis(1);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].bits, 1u);
}

TEST(DualBasis, TwoBitMatrixInverse) {
  // Gram matrix over {1, x} in GF(4): Tr(1) = 0, Tr(x) = 1, Tr(x^2) = Tr(x+1) = 1.
  // G = [[0,1],[1,1]], G^{-1} = [[1,1],[1,0]] → b*_0 = 1 + x, b*_1 = 1.
  const std::uint32_t g00 = gf_trace({1}, 2), g01 = gf_trace({0b10}, 2),
                      g11 = gf_trace(gf_mul({0b10}, {0b10}, 2), 2);
  ASSERT_EQ(g00, 0);
  ASSERT_EQ(g01, 1);
  ASSERT_EQ(g11, 1);
  const std::uint32_t det = (g00 & g11) ^ (g01 & g01);
  ASSERT_EQ(det, 1u);
  // Inverse of a symmetric 2×2 over GF(2): [[g11, g01], [g01, g00]].
  const std::uint32_t inv[2][2] = {{g11, g01}, {g01, g00}};
  const auto d = dual_basis(2);
  ASSERT_EQ(d.size(), 2u);
  for (int j = 0; j < 2; ++j) {
    EXPECT_EQ(d[j].bits, inv[j][0] | (inv[j][1] << 1)) << j;
  }
}

TEST(DualBasis, Biorthogonal) {
  for (int p = 1; p <= 8; ++p) {
    const auto d = dual_basis(p);
    ASSERT_EQ(d.size(), static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        EXPECT_EQ(gf_trace(gf_mul(monomial(i), d[j], p), p), i == j ? 1 : 0);
      }
    }
  }
}

TEST(DualCoordinates, ExpandsInDualBasis) {
  for (int p = 1; p <= 5; ++p) {
    const auto d = dual_basis(p);
    for (std::uint32_t b = 0; b < (1u << p); ++b) {
      const std::uint32_t z = dual_coordinates({b}, p);
      GFElement rebuilt{0};
      for (int j = 0; j < p; ++j) {
        if ((z >> j) & 1u) rebuilt = gf_add(rebuilt, d[j]);
      }
      EXPECT_EQ(rebuilt.bits, b);
    }
  }
}

}  // namespace
}  // namespace werner::gf2
