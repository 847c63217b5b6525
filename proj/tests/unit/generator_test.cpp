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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ztower/classifier.hpp"
#include "ztower/eisenstein.hpp"
#include "ztower/errors.hpp"
#include "ztower/families.hpp"
#include "ztower/forms.hpp"

namespace ztower {
namespace {

const long kSplitPrimes[] = {7, 13, 19, 31, 37, 43, 61, 67, 73, 79};

TEST(Eisenstein, NormIsMultiplicative) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    Eisenstein a{d(rng), d(rng)}, b{d(rng), d(rng)};
    ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
    ASSERT_EQ(a.conj().norm(), a.norm());
    ASSERT_EQ((a * a.conj()).y, 0);
  }
}

TEST(Eisenstein, UnitsAndDivision) {
  for (const auto& u : eisenstein_units()) EXPECT_EQ(u.norm(), 1);
  Eisenstein a{17, -5}, b{3, 1};
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.norm(), b.norm());
}

TEST(Eisenstein, SplitPrime) {
  for (long p : kSplitPrimes) EXPECT_EQ(split_prime(p).norm(), p);
  EXPECT_THROW(split_prime(5), InputError);
  EXPECT_THROW(split_prime(21), InputError);
}

TEST(Eisenstein, CubeNormalized) {
  auto [a, b] = cube_normalized({3, 1});
  EXPECT_EQ(a, 19);
  EXPECT_EQ(b, 6);
  for (long p = 7; p < 200; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p)) || p % 3 != 1) continue;
    auto [x, y] = cube_normalized(split_prime(p));
    ASSERT_EQ(gcd(x, y), 1);
    ASSERT_EQ(x * x - 3 * x * y + 9 * y * y, Integer(p) * p * p);
  }
}

// Exhaustive search for primitive representations, |v| up to the bound from the form.
std::set<std::pair<Integer, Integer>> all_primitive(FormId f, const Integer& target) {
  std::set<std::pair<Integer, Integer>> out;
  // 4a*form = (2au + bv)^2 + |D| v^2 with |D| = 27 for F3, F13, DISC27 and 108 for U27
  const long a = 1;
  const long b = f == FormId::U27 ? 0 : f == FormId::DISC27 ? 1 : f == FormId::F3 ? 3 : 13;
  const long D = f == FormId::U27 ? 108 : 27;
  const long vmax = iroot_floor(Integer(4 * a * target / D), 2).get_si();
  for (long v = -vmax; v <= vmax; ++v) {
    Integer rest = 4 * a * target - Integer(D) * v * v;
    auto s = exact_sqrt(rest);
    if (!s) continue;
    for (Integer w : {*s, Integer(-*s)}) {
      Integer num = w - b * v;
      if (num % (2 * a) != 0) continue;
      Integer u = num / (2 * a);
      if (evaluate_form(f, u, Integer(v)) == target && gcd(u, Integer(v)) == 1) out.insert({u, Integer(v)});
    }
  }
  return out;
}

TEST(Forms, PinnedInstances) {
  EXPECT_EQ(evaluate_form(FormId::U27, 111, 1), form_target(FormId::U27, 2, 7));
  EXPECT_EQ(evaluate_form(FormId::F3, 60, 17), form_target(FormId::F3, 3, 7));
  EXPECT_EQ(form_target(FormId::U27, 2, 7), 12348);
  EXPECT_EQ(form_target(FormId::F3, 3, 7), 9261);
  EXPECT_EQ(to_string(parse_form("F13")), "F13");
}

TEST(Forms, SolverAgreesWithExhaustiveSearch) {
  const std::pair<FormId, int> cases[] = {{FormId::U27, 2}, {FormId::U27, 3}, {FormId::F13, 2},
                                          {FormId::F13, 3}, {FormId::F3, 3},  {FormId::DISC27, 3}};
  for (long p : kSplitPrimes) {
    for (auto [f, k] : cases) {
      FormSolution s = solve_form(f, k, p);
      ASSERT_EQ(evaluate_form(f, s.u, s.v), s.target);
      ASSERT_EQ(gcd(s.u, s.v), 1);
      auto valid = all_primitive(f, s.target);
      ASSERT_FALSE(valid.empty());
      ASSERT_TRUE(valid.count({s.u, s.v})) << to_string(f) << " p=" << p;
      for (const auto& t : form_solutions(f, k, p)) ASSERT_TRUE(valid.count({t.u, t.v}));
    }
  }
}

TEST(Forms, UnsupportedK) {
  EXPECT_THROW(solve_form(FormId::F3, 2, 7), InputError);
  EXPECT_THROW(solve_form(FormId::U27, 4, 7), InputError);
}

struct FamilyCase {
  const char* name;
  Family family;
  TorsionGroup base, tower;
};

class SplitFamilies : public ::testing::TestWithParam<FamilyCase> {};

TEST_P(SplitFamilies, RoundTripAndDistinctJ) {
  const FamilyCase& fc = GetParam();
  std::set<Rational> js;
  for (long p : kSplitPrimes) {
    FamilyParams params;
    params.family = fc.family;
    params.p = p;
    FamilyCurve c = gen_curve(params);
    EXPECT_EQ(c.curve.j_invariant(), c.family_j) << p;
    EXPECT_EQ(c.expected_base, fc.base);
    EXPECT_EQ(c.expected_tower, fc.tower);
    GrowthReport r = classify(c.curve, 3);
    EXPECT_EQ(r.verdict, Verdict::Resolved);
    EXPECT_EQ(r.base, fc.base) << p;
    EXPECT_EQ(r.tower, fc.tower) << p;
    js.insert(c.family_j);
  }
  EXPECT_EQ(js.size(), std::size(kSplitPrimes));
}

INSTANTIATE_TEST_SUITE_P(Families, SplitFamilies,
                         ::testing::Values(FamilyCase{"TrivToZ7", Family::TrivToZ7, {1, 1}, {1, 7}},
                                           FamilyCase{"Z3toZ9", Family::Z3toZ9, {1, 3}, {1, 9}},
                                           FamilyCase{"Z2xZ2over3", Family::Z2xZ2_over3, {1, 1}, {2, 2}},
                                           FamilyCase{"Z3toZ2xZ6", Family::Z3toZ2xZ6, {1, 3}, {2, 6}}),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Families, JFormulas) {
  FamilyParams params;
  params.family = Family::TrivToZ7;
  params.p = 7;
  FamilyCurve c = gen_curve(params);
  const Rational h = c.parameter;
  EXPECT_EQ(c.family_j, (h * h + 13 * h + 49) * (h * h + 5 * h + 1) * (h * h + 5 * h + 1) * (h * h + 5 * h + 1) / h);
  ASSERT_TRUE(c.form.has_value());
  EXPECT_EQ(h, Rational(c.form->u, 1) / Rational(c.form->v, 1));

  params.family = Family::Z2xZ2_over3;
  FamilyCurve d = gen_curve(params);
  const Rational g = d.parameter;
  EXPECT_TRUE(is_square(g));
  EXPECT_EQ(d.family_j, (g + 27) * (g + 3) * (g + 3) * (g + 3) / g);
}

TEST(Families, Z3toZ9PinnedSolution) {
  // the pinned (60, 17) instance, instantiated in the family model directly
  const Rational h(60, 17);
  const Rational h3 = h * h * h;
  const Rational A = -27 * h * h * h * h * h * (h3 - 24) * (h3 - 24) * (h3 - 24) * (h3 - 24) * (h3 - 24);
  const Rational B = 54 * h3 * h3 * (h3 - 24) * (h3 - 24) * (h3 - 24) * (h3 - 24) * (h3 - 24) * (h3 - 24) *
                     (h3 * h3 - 36 * h3 + 216);
  Curve E = Curve::short_weierstrass(A, B);
  GrowthReport r = classify(E, 3);
  EXPECT_EQ(r.base, (TorsionGroup{1, 3}));
  EXPECT_EQ(r.tower, (TorsionGroup{1, 9}));
}

TEST(Families, Z2xZ2Over2) {
  for (int t : {2, 3, 5}) {
    FamilyParams params;
    params.family = Family::Z2xZ2_over2;
    params.t = t;
    FamilyCurve c = gen_curve(params);
    EXPECT_EQ(c.curve.j_invariant(), c.family_j);
    GrowthReport r = classify(c.curve, 2);
    EXPECT_EQ(r.base, (TorsionGroup{1, 2}));
    EXPECT_EQ(r.tower, (TorsionGroup{2, 2}));
  }
  FamilyParams zero;
  zero.family = Family::Z2xZ2_over2;
  zero.t = 0;
  EXPECT_THROW(gen_curve(zero), InputError);
}

TEST(Families, TateNormalForms) {
  for (int N : {3, 4, 5, 6, 7, 8, 9, 10, 12}) {
    Curve E = tate_normal_form(N, Rational(5, 2));
    EXPECT_EQ(rational_torsion(E).group, (TorsionGroup{1, N})) << N;
  }
  EXPECT_THROW(tate_normal_form(11, 2), InputError);
}

TEST(Families, TwistBy2) {
  for (int N : {5, 7, 9}) {
    FamilyParams params;
    params.family = Family::TwistBy2;
    params.N = N;
    params.t = 2;
    FamilyCurve c = gen_curve(params);
    EXPECT_EQ(c.twist, 2);
    EXPECT_EQ(rational_torsion(c.curve).group, (TorsionGroup{1, 1}));
    GrowthReport r = classify(c.curve, 2);
    EXPECT_EQ(r.tower, (TorsionGroup{1, N}));
    EXPECT_EQ(r.tower, c.expected_tower);
  }
}

TEST(Families, Names) {
  for (Family f : {Family::Z2xZ2_over3, Family::Z3toZ2xZ6, Family::TrivToZ7, Family::Z3toZ9, Family::Z2xZ2_over2,
                   Family::TwistBy2}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_EQ(parse_family("TrivToZ7"), Family::TrivToZ7);
  EXPECT_THROW(parse_family("z5"), InputError);
  FamilyParams bad;
  bad.family = Family::TrivToZ7;
  bad.p = 11;
  EXPECT_THROW(gen_curve(bad), InputError);
}

}  // namespace
}  // namespace ztower
