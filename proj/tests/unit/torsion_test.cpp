// Copyright 2026 The ztower Authors
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

#include "ztower/torsion.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ztower/errors.hpp"
#include "ztower/report.hpp"

namespace ztower {
namespace {

TEST(TorsionGroup, StringsRoundTrip) {
  for (const auto& g : mazur_list()) EXPECT_EQ(TorsionGroup::parse(g.str()), g);
  EXPECT_EQ(TorsionGroup({1, 1}).str(), "trivial");
  EXPECT_EQ(TorsionGroup({2, 8}).str(), "Z/2Z x Z/8Z");
  EXPECT_EQ(TorsionGroup::parse("Z/2Z x Z/6Z"), (TorsionGroup{2, 6}));
  EXPECT_THROW(TorsionGroup::parse("Z/3Z x Z/3Z"), InputError);
  EXPECT_THROW(TorsionGroup::parse("nonsense"), InputError);
}

TEST(TorsionGroup, MazurList) {
  EXPECT_EQ(mazur_list().size(), 15u);
  EXPECT_TRUE(in_mazur_list({1, 12}));
  EXPECT_FALSE(in_mazur_list({1, 11}));
  EXPECT_FALSE(in_mazur_list({2, 10}));
  EXPECT_TRUE(is_subgroup({1, 3}, {2, 6}));
  EXPECT_TRUE(is_subgroup({2, 2}, {2, 4}));
  EXPECT_FALSE(is_subgroup({2, 2}, {1, 8}));
  EXPECT_EQ(TorsionGroup({2, 12}).primary_part(2), 8);
}

struct Known {
  const char* label;
  std::array<long, 5> a;
  TorsionGroup group;
};

// Orders from the Cremona tables; structure where the order is ambiguous.
const Known kKnown[] = {
    {"11a1", {0, -1, 1, -10, -20}, {1, 5}},    {"14a1", {1, 0, 1, 4, -6}, {1, 6}},
    {"15a1", {1, 1, 1, -10, -10}, {2, 4}},     {"15a4", {1, 1, 1, 35, -28}, {1, 8}},
    {"19a1", {0, 1, 1, -9, -15}, {1, 3}},      {"26b1", {1, -1, 1, -3, 3}, {1, 7}},
    {"30a2", {1, 0, 1, -19, 26}, {2, 6}},      {"37a1", {0, 0, 1, -1, 0}, {1, 1}},
    {"54b3", {1, -1, 1, -14, 29}, {1, 9}},     {"66c1", {1, 0, 0, -45, 81}, {1, 10}},
    {"90c3", {1, -1, 1, -122, 1721}, {1, 12}}, {"210e2", {1, 0, 0, -1070, 7812}, {2, 8}},
};

TEST(RationalTorsion, KnownCurves) {
  for (const auto& k : kKnown) {
    Curve E = Curve::from_ainvs(k.a);
    TorsionData t = rational_torsion(E);
    EXPECT_EQ(t.group, k.group) << k.label;
  }
}

TEST(RationalTorsion, GeneratorsHaveExactOrders) {
  for (const auto& k : kKnown) {
    Curve E = Curve::from_ainvs(k.a);
    TorsionData t = rational_torsion(E);
    if (t.group.is_trivial()) {
      EXPECT_TRUE(t.generators.empty());
      continue;
    }
    ASSERT_EQ(t.generators.size(), t.group.m == 2 ? 2u : 1u) << k.label;
    for (const auto& P : t.generators) ASSERT_TRUE(E.contains(P));
    EXPECT_EQ(point_order(E, t.generators.back()), t.group.n) << k.label;
    if (t.group.m == 2) {
      EXPECT_EQ(point_order(E, t.generators.front()), 2);
      // not inside the cyclic subgroup generated by the other
      EXPECT_NE(scalar_mul(E, t.group.n / 2, t.generators.back()), t.generators.front());
    }
  }
}

TEST(RationalTorsion, OrderDividesBruteForcePointCounts) {
  for (const auto& k : kKnown) {
    Curve E = Curve::from_ainvs(k.a);
    long order = rational_torsion(E).group.order();
    for (std::uint64_t q : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
      if (!has_good_reduction(E, q)) continue;
      EXPECT_EQ(oracle::brute_count(E.integral_ainvs(), q) % order, 0u) << k.label << " q=" << q;
    }
  }
}

TEST(RationalTorsion, FixtureBaseGroups) {
  for (const auto& row : load_fixtures(ZTOWER_FIXTURES)) {
    EXPECT_EQ(rational_torsion(row.curve()).group, row.expected_base) << row.label;
  }
}

TEST(RationalTorsion, OrderBound) {
  Curve E = Curve::from_ainvs(std::array<long, 5>{0, -1, 1, -10, -20});
  EXPECT_EQ(torsion_order_bound(E), 5);
}

}  // namespace
}  // namespace ztower
