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

#include "ztower/curve.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ztower/errors.hpp"

namespace ztower {
namespace {

TEST(Curve, Invariants11a1) {
  Curve E = Curve::from_ainvs(std::array<long, 5>{0, -1, 1, -10, -20});
  EXPECT_EQ(E.discriminant(), Rational(-161051));
  EXPECT_EQ(E.j_invariant(), Rational(-122023936, 161051));
  EXPECT_EQ(E.c4(), Rational(496));
  EXPECT_EQ(E.c6(), Rational(20008));
}

TEST(Curve, JOf27a4) {
  Curve E = Curve::from_ainvs(std::array<long, 5>{0, 0, 1, -30, 63});
  EXPECT_EQ(E.j_invariant(), Rational(-12288000));
}

TEST(Curve, SingularRejected) {
  EXPECT_THROW(Curve::from_ainvs(std::array<long, 5>{0, 0, 0, 0, 0}), SingularCurve);
  EXPECT_THROW(Curve::short_weierstrass(-3, 2), SingularCurve);
}

TEST(Curve, ShortModelIsomorphism) {
  Curve E = Curve::from_ainvs(std::array<long, 5>{1, -1, 1, -5, 5});  // 162b1
  Point P = Point::affine(1, 0);
  ASSERT_TRUE(E.contains(P));
  Point S = E.to_short(P);
  const ShortModel& m = E.short_model();
  EXPECT_EQ(S.y * S.y, S.x * S.x * S.x + m.A * S.x + m.B);
  EXPECT_EQ(E.from_short(S), P);
  Curve Es = Curve::short_weierstrass(Rational(m.A), Rational(m.B));
  EXPECT_EQ(Es.j_invariant(), E.j_invariant());
}

TEST(Curve, GroupLawOnMordellCurve) {
  Curve E = Curve::short_weierstrass(0, 17);
  std::vector<Point> pts = {Point::affine(-2, 3), Point::affine(-1, 4), Point::affine(2, 5), Point::affine(4, 9),
                            Point::affine(8, 23)};
  for (const auto& P : pts) ASSERT_TRUE(E.contains(P));
  for (const auto& P : pts) {
    EXPECT_EQ(add(E, P, negate(E, P)), Point::at_infinity());
    for (const auto& Q : pts) {
      EXPECT_EQ(add(E, P, Q), add(E, Q, P));
      for (const auto& R : pts) EXPECT_EQ(add(E, add(E, P, Q), R), add(E, P, add(E, Q, R)));
    }
  }
  EXPECT_EQ(scalar_mul(E, 3, pts[0]), add(E, pts[0], add(E, pts[0], pts[0])));
  EXPECT_EQ(point_order(E, pts[0]), 0);  // infinite order
}

TEST(Curve, PointOrder) {
  Curve E = Curve::from_ainvs(std::array<long, 5>{0, 0, 1, 0, 0});
  EXPECT_EQ(point_order(E, Point::affine(0, 0)), 3);
  Curve F = Curve::short_weierstrass(0, 1);
  EXPECT_EQ(point_order(F, Point::affine(2, 3)), 6);
  EXPECT_EQ(point_order(F, Point::affine(-1, 0)), 2);
  EXPECT_EQ(point_order(F, Point::affine(0, 1)), 3);
}

TEST(Curve, CountPointsMatchesBruteForce) {
  const std::vector<std::array<long, 5>> curves = {
      {0, -1, 1, -10, -20}, {1, 0, 1, -36, -70}, {0, 0, 1, -30, 63}, {1, -1, 1, 25, 1}, {0, 0, 0, -11, 14}};
  for (const auto& a : curves) {
    Curve E = Curve::from_ainvs(a);
    for (std::uint64_t q = 3; q < 200; ++q) {
      if (!is_prime(q) || !has_good_reduction(E, q)) continue;
      ASSERT_EQ(count_points(E, q), oracle::brute_count(E.integral_ainvs(), q)) << "q=" << q;
    }
  }
}

TEST(Curve, QuadraticTwistFlipsTrace) {
  Curve E = Curve::from_ainvs(std::array<long, 5>{0, -1, 1, -10, -20});
  Curve T = quadratic_twist(E, -7);
  EXPECT_EQ(T.j_invariant(), E.j_invariant());
  for (std::uint64_t q : {13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
    long aE = static_cast<long>(q + 1) - static_cast<long>(count_points(E, q));
    long aT = static_cast<long>(q + 1) - static_cast<long>(count_points(T, q));
    long chi = 0;
    for (std::uint64_t y = 1; y < q; ++y) chi = chi || (y * y % q == (q - 7 % q) % q);
    EXPECT_EQ(aT, chi ? aE : -aE) << q;
  }
}

}  // namespace
}  // namespace ztower
