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

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "werner/partition.hpp"

namespace werner {
namespace {

std::vector<std::string> letters(const CommutingClass& cls) {
  std::vector<std::string> out;
  for (const auto& s : cls.members) out.push_back(s.letter_string());
  return out;
}

std::vector<int> digits_of(const PauliIndexString& s) {
  return {s.digits().begin(), s.digits().end()};
}

TEST(Partition, SingleQubitAxes) {
  const auto part = build_partition(1);
  ASSERT_EQ(part.classes.size(), 3u);
  EXPECT_EQ(letters(part.classes[0]), std::vector<std::string>{"Z"});
  EXPECT_EQ(letters(part.classes[1]), std::vector<std::string>{"X"});
  EXPECT_EQ(letters(part.classes[2]), std::vector<std::string>{"Y"});
  EXPECT_FALSE(part.classes[0].slope.has_value());
  EXPECT_EQ(part.classes[0].id(), "inf");
}

TEST(Partition, TwoQubitsHasPureZClass) {
  const auto part = build_partition(2);
  ASSERT_EQ(part.classes.size(), 5u);
  EXPECT_EQ(letters(part.classes[0]), (std::vector<std::string>{"IZ", "ZI", "ZZ"}));
  for (const auto& cls : part.classes) EXPECT_EQ(cls.members.size(), 3u);
}

TEST(Partition, ThreeQubitsCoverage) {
  const auto part = build_partition(3);
  ASSERT_EQ(part.classes.size(), 9u);
  std::set<PauliIndexString> all;
  for (const auto& cls : part.classes) {
    EXPECT_EQ(cls.members.size(), 7u);
    all.insert(cls.members.begin(), cls.members.end());
  }
  EXPECT_EQ(all.size(), 63u);
}

TEST(Partition, ValidForSupportedSizes) {
  for (int p = 1; p <= 6; ++p) {
    const auto v = validate_partition(build_partition(p), p);
    EXPECT_TRUE(v.ok) << p << ": " << (v.diagnostics.empty() ? "" : v.diagnostics[0]);
  }
}

TEST(Partition, OrderingIsCanonical) {
  for (int p = 1; p <= 4; ++p) {
    const auto part = build_partition(p);
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
      const auto& cls = part.classes[c];
      EXPECT_TRUE(std::is_sorted(cls.members.begin(), cls.members.end()));
      if (c == 0) continue;
      ASSERT_TRUE(cls.slope.has_value());
      EXPECT_EQ(*cls.slope, c - 1);
    }
  }
  EXPECT_EQ(partition_to_text(build_partition(2)),
            partition_to_text(build_partition(2)));
}

TEST(Partition, DenseCommutationOracle) {
  for (int p = 1; p <= 3; ++p) {
    for (const auto& cls : build_partition(p).classes) {
      for (const auto& a : cls.members) {
        for (const auto& b : cls.members) {
          EXPECT_LT(testing::commutator_norm(testing::pauli_ref(digits_of(a)),
                                             testing::pauli_ref(digits_of(b))),
                    1e-12);
        }
      }
    }
  }
}

TEST(Partition, ClassesAreMaximal) {
  for (int p = 1; p <= 3; ++p) {
    const auto part = build_partition(p);
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
      for (std::size_t j = i + 1; j < part.classes.size(); ++j) {
        bool witness = false;
        for (const auto& a : part.classes[i].members) {
          for (const auto& b : part.classes[j].members) {
            if (!commutes(a, b)) witness = true;
          }
        }
        EXPECT_TRUE(witness) << p << " " << i << " " << j;
      }
    }
    // No string outside a class commutes with every member.
    for (const auto& cls : part.classes) {
      const std::set<PauliIndexString> members(cls.members.begin(), cls.members.end());
      for_each_pauli_string(p, [&](const PauliIndexString& s) {
        if (s.is_identity() || members.contains(s)) return;
        bool all = true;
        for (const auto& m : cls.members) all = all && commutes(s, m);
        EXPECT_FALSE(all) << s.letter_string();
      });
    }
  }
}

TEST(Partition, GroupClosedWithIdentity) {
  for (int p = 1; p <= 4; ++p) {
    for (const auto& cls : build_partition(p).classes) {
      std::set<PauliIndexString> group(cls.members.begin(), cls.members.end());
      group.insert(PauliIndexString::identity(p));
      for (const auto& a : group) {
        for (const auto& b : group) {
          const auto prod = pauli_product(a, b);
          EXPECT_TRUE(group.contains(prod.string));
          EXPECT_EQ(prod.quarter_turns % 2, 0);
        }
      }
    }
  }
}

TEST(Validate, DetectsAnticommutingPair) {
  auto part = build_partition(2);
  const auto xx = PauliIndexString::parse("XX");
  for (auto& cls : part.classes) {
    if (std::find(cls.members.begin(), cls.members.end(), xx) == cls.members.end()) {
      continue;
    }
    for (auto& m : cls.members) {
      if (m != xx) {
        m = PauliIndexString::parse("XZ");
        break;
      }
    }
  }
  const auto v = validate_partition(part, 2);
  EXPECT_FALSE(v.ok);
  bool mentions = false;
  for (const auto& d : v.diagnostics) {
    mentions = mentions || d.find("anticommute") != std::string::npos;
  }
  EXPECT_TRUE(mentions);
}

TEST(Validate, DetectsMissingString) {
  auto part = build_partition(3);
  part.classes[4].members.pop_back();
  const auto v = validate_partition(part, 3);
  EXPECT_FALSE(v.ok);
  bool coverage = false;
  for (const auto& d : v.diagnostics) {
    coverage = coverage || d.find("coverage") != std::string::npos;
  }
  EXPECT_TRUE(coverage);
}

TEST(Validate, DetectsWrongClassCount) {
  auto part = build_partition(2);
  part.classes.pop_back();
  EXPECT_FALSE(validate_partition(part, 2).ok);
  EXPECT_FALSE(validate_partition(build_partition(2), 3).ok);
}

}  // namespace
}  // namespace werner
