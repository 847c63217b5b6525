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

#include "oracles.hpp"
#include "ztower/errors.hpp"
#include "ztower/int_poly.hpp"
#include "ztower/mod_poly.hpp"

namespace ztower {
namespace {

TEST(IntPoly, ArithmeticAndPrinting) {
  IntPoly f{-2, 0, 1};  // x^2 - 2
  IntPoly g{1, 1};
  EXPECT_EQ((f * g).str(), "x^3 + x^2 - 2*x - 2");
  EXPECT_EQ((f - f).degree(), -1);
  EXPECT_EQ(f(Integer(3)), 7);
  EXPECT_EQ(f(Rational(1, 2)), Rational(-7, 4));
  EXPECT_EQ(derivative(f), (IntPoly{0, 2}));
  EXPECT_EQ(compose(f, g), (IntPoly{-1, 2, 1}));
}

TEST(IntPoly, ContentAndPrimitivePart) {
  IntPoly f{6, -4, -2};
  EXPECT_EQ(content(f), 2);
  EXPECT_EQ(primitive_part(f), (IntPoly{-3, 2, 1}));
}

TEST(IntPoly, DivRemIdentity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    IntPoly a = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 10), 20);
    IntPoly b = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 20);
    DivRem qr = divrem(a, b);
    // lc(b)^k a = q b + r
    ASSERT_EQ(ipow(b.leading(), qr.lc_power) * a, qr.quotient * b + qr.remainder);
    ASSERT_LT(qr.remainder.degree(), b.degree());
  }
  EXPECT_THROW(divrem(IntPoly{1, 1}, IntPoly{}), DivisionByZero);
}

TEST(IntPoly, ExactQuotient) {
  IntPoly a{-1, 0, 0, 1}, b{-1, 1};
  EXPECT_EQ(*exact_quotient(a, b), (IntPoly{1, 1, 1}));
  EXPECT_FALSE(exact_quotient(a, IntPoly{1, 2}));
}

TEST(IntPoly, GcdDividesBoth) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 60; ++i) {
    IntPoly c = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
    IntPoly a = c * oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 9);
    IntPoly b = c * oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 9);
    IntPoly g = gcd(a, b);
    ASSERT_TRUE(exact_quotient(a, g).has_value());
    ASSERT_TRUE(exact_quotient(b, g).has_value());
    ASSERT_TRUE(exact_quotient(g, primitive_part(c)).has_value());
  }
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 150; ++i) {
    IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 7), 30);
    IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 7), 30);
    ASSERT_EQ(resultant(f, g), oracle::sylvester_resultant(f, g)) << f.str() << " | " << g.str();
  }
}

TEST(Resultant, CommonRootGivesZero) {
  IntPoly f = IntPoly{-3, 1} * IntPoly{1, 0, 1};
  IntPoly g = IntPoly{-3, 1} * IntPoly{5, 7};
  EXPECT_EQ(resultant(f, g), 0);
}

TEST(Discriminant, KnownValues) {
  EXPECT_EQ(discriminant(IntPoly{1, -3, 0, 1}), 81);     // x^3 - 3x + 1
  EXPECT_EQ(discriminant(IntPoly{-2, 0, 0, 1}), -108);   // x^3 - 2
  EXPECT_EQ(discriminant(IntPoly{3, 2, 1}), -8);         // b^2 - 4ac
  EXPECT_EQ(discriminant(IntPoly{2, 0, -4, 0, 1}), 2048);  // x^4 - 4x^2 + 2
}

TEST(Resultant, BivariateAgreesWithSpecialisation) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20; ++i) {
    IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 12);
    IntPoly F = oracle::random_poly(rng, 3, 12);
    IntPoly r = resultant_x(g, y_squared_minus(F));
    EXPECT_EQ(r.degree(), 2 * g.degree());
    for (long y0 = -3; y0 <= 3; ++y0) {
      IntPoly h = IntPoly::constant(Integer(y0 * y0)) - F;
      ASSERT_EQ(r(Integer(y0)), oracle::sylvester_resultant(g, h));
    }
  }
}

TEST(ModPoly, MultiplyDivideRoundTrip) {
  std::mt19937_64 rng(15);
  const std::uint64_t q = 1000003;
  for (int i = 0; i < 50; ++i) {
    auto a = modp::reduce(oracle::random_poly(rng, 12, 1000), q);
    auto b = modp::reduce(oracle::random_poly(rng, 5, 1000), q);
    if (b.empty()) continue;
    auto [quo, r] = modp::divrem(a, b, q);
    ASSERT_EQ(modp::add(modp::mul(quo, b, q), r, q), a);
  }
}

TEST(ModPoly, FactorMatchesRootCount) {
  std::mt19937_64 rng(16);
  for (std::uint64_t q : {2ull, 3ull, 5ull, 13ull, 101ull}) {
    for (int i = 0; i < 40; ++i) {
      IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 9), 50);
      if (oracle::mod(f.leading(), q) == 0) continue;
      auto fac = factor_mod_p(f, q);
      int linear = 0, total_degree = 0;
      modp::Poly prod{fac.unit};
      for (const auto& fa : fac.factors) {
        if (modp::degree(fa.poly) == 1) ++linear;
        total_degree += modp::degree(fa.poly) * fa.multiplicity;
        for (int e = 0; e < fa.multiplicity; ++e) prod = modp::mul(prod, fa.poly, q);
      }
      ASSERT_EQ(total_degree, f.degree());
      ASSERT_EQ(prod, modp::reduce(f, q));
      ASSERT_EQ(linear, oracle::count_roots_mod(f, q));
    }
  }
}

TEST(ModPoly, IrreducibleFactorsHaveNoSmallerFactor) {
  // x^(q^d) - x is divisible by every irreducible of degree dividing d
  const std::uint64_t q = 7;
  IntPoly f = IntPoly{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1} * IntPoly{3, 1, 0, 1};
  for (const auto& fa : factor_mod_p(f, q).factors) {
    const int d = modp::degree(fa.poly);
    auto xq = modp::powmod(modp::Poly{0, 1}, ipow(Integer(q), d), fa.poly, q);
    ASSERT_EQ(xq, modp::rem(modp::Poly{0, 1}, fa.poly, q)) << "degree " << d;
    for (int e = 1; e < d; ++e) {
      auto xe = modp::powmod(modp::Poly{0, 1}, ipow(Integer(q), e), fa.poly, q);
      auto g = modp::gcd(modp::sub(xe, modp::Poly{0, 1}, q), fa.poly, q);
      ASSERT_EQ(modp::degree(g), 0);
    }
  }
}

}  // namespace
}  // namespace ztower
