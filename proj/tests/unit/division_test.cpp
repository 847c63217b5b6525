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

#include "ztower/division.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace ztower {
namespace {

TEST(Division, SmallCases) {
  DivisionPolynomials dp(Integer(-2), Integer(5));
  const Integer A = -2, B = 5;
  EXPECT_EQ(dp.reduced(1), IntPoly{1});
  EXPECT_EQ(dp.reduced(2), IntPoly{1});
  EXPECT_EQ(dp.reduced(3), IntPoly(std::vector<Integer>{-A * A, 12 * B, 6 * A, 0, 3}));
  EXPECT_EQ(dp.torsion_x(2), IntPoly(std::vector<Integer>{B, A, 0, 1}));
  EXPECT_EQ(dp.reduced(4),
            IntPoly(std::vector<Integer>{2 * (-8 * B * B - A * A * A), -8 * A * B, -10 * A * A, 40 * B, 10 * A, 0, 2}));
}

TEST(Division, DegreeFormulas) {
  DivisionPolynomials dp(Integer(-7), Integer(10));
  for (int n = 1; n <= 30; ++n) {
    const IntPoly& g = dp.reduced(n);
    if (n % 2) {
      ASSERT_EQ(g.degree(), (n * n - 1) / 2) << n;
      ASSERT_EQ(g.leading(), n);
    } else {
      ASSERT_EQ(g.degree(), (n * n - 4) / 2) << n;
      ASSERT_EQ(g.leading(), n / 2);
    }
  }
}

TEST(Division, ExactOrderDegrees) {
  // deg f_n = (1/2) #{points of exact order n} = (1/2) n^2 prod (1 - 1/l^2), n > 2
  DivisionPolynomials dp(Integer(3), Integer(-4));
  auto jordan = [](int n) {
    long num = n * n;
    for (int l = 2; l <= n; ++l) {
      bool prime = true;
      for (int d = 2; d * d <= l; ++d) prime = prime && l % d;
      if (prime && n % l == 0) num = num / (l * l) * (l * l - 1);
    }
    return num;
  };
  EXPECT_EQ(dp.exact_order(2).degree(), 3);
  for (int n = 3; n <= 16; ++n) ASSERT_EQ(dp.exact_order(n).degree(), jordan(n) / 2) << n;
}

// Points over F_q: torsion_x(n) vanishes at x(P) iff nP = O, and f_n iff P has exact order n.
TEST(Division, AgreesWithBruteForceOrdersModQ) {
  std::mt19937_64 rng(31);
  int curves = 0;
  while (curves < 5) {
    long A = static_cast<long>(rng() % 41) - 20, B = static_cast<long>(rng() % 41) - 20;
    if (4 * A * A * A + 27 * B * B == 0) continue;
    ++curves;
    DivisionPolynomials dp{Integer(A), Integer(B)};
    for (std::uint64_t q : {101ull, 103ull, 107ull}) {
      if ((4 * A * A * A + 27 * B * B) % static_cast<long>(q) == 0) continue;
      oracle::ShortModQ E{static_cast<std::uint64_t>((A % static_cast<long>(q) + static_cast<long>(q)) % q),
                          static_cast<std::uint64_t>((B % static_cast<long>(q) + static_cast<long>(q)) % q), q};
      for (const auto& P : E.points()) {
        const long ord = E.order(P);
        for (int n = 2; n <= 12; ++n) {
          ASSERT_EQ(oracle::eval_mod(dp.torsion_x(n), P.first, q) == 0, n % ord == 0) << A << "," << B << " n=" << n;
          ASSERT_EQ(oracle::eval_mod(dp.exact_order(n), P.first, q) == 0, ord == n) << A << "," << B << " n=" << n;
        }
      }
    }
  }
}

TEST(Division, WrappersUseIntegralShortModel) {
  Curve E = Curve::from_ainvs(std::array<long, 5>{0, 0, 1, 0, 0});
  // 3-torsion of y^2 + y = x^3 sits at x = 0: short model X = 36x/mu^2
  auto roots = exact_order_poly(E, 3);
  EXPECT_EQ(roots.degree(), 4);
  EXPECT_EQ(division_poly(E, 5).degree(), 12);
  EXPECT_EQ(torsion_x_poly(E, 4).degree(), 9);
}

}  // namespace
}  // namespace ztower
