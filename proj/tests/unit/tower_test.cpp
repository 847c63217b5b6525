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

#include "ztower/tower.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "ztower/errors.hpp"
#include "ztower/factor.hpp"

namespace ztower {
namespace {

TEST(Layer, Basics) {
  EXPECT_EQ((LayerField{3, 2}).degree(), 9);
  EXPECT_EQ((LayerField{3, 1}).conductor(), 9);
  EXPECT_EQ((LayerField{2, 1}).conductor(), 8);
  EXPECT_EQ((LayerField{2, 3}).str(), "Q_{3,2}");
}

TEST(Layer, Polynomials) {
  EXPECT_EQ(layer_polynomial({2, 1}), (IntPoly{-2, 0, 1}));
  EXPECT_EQ(layer_polynomial({2, 2}), (IntPoly{2, 0, -4, 0, 1}));
  EXPECT_EQ(layer_polynomial({3, 1}), (IntPoly{1, -3, 0, 1}));
  for (int m = 1; m <= 3; ++m) {
    for (long p : {2L, 3L}) {
      IntPoly f = layer_polynomial({p, m});
      EXPECT_EQ(Integer(f.degree()), (LayerField{p, m}).degree());
      EXPECT_TRUE(is_irreducible(f));
    }
  }
}

// q splits completely in Q_{m,p} iff its layer polynomial has deg-many roots mod q.
TEST(Layer, SplittingLawMatchesRootCounts) {
  for (long p : {2L, 3L}) {
    for (int m = 1; m <= 2; ++m) {
      LayerField L{p, m};
      IntPoly f = layer_polynomial(L);
      for (std::uint64_t q = 5; q < 500; ++q) {
        if (!is_prime(q)) continue;
        const bool all_roots = oracle::count_roots_mod(f, q) == f.degree();
        ASSERT_EQ(splits_in_layer(q, L), all_roots) << L.str() << " q=" << q;
      }
    }
  }
}

TEST(CubicConductor, Examples) {
  EXPECT_EQ(*cubic_conductor(-3, 1), 9);
  EXPECT_FALSE(cubic_conductor(0, -2).has_value());
  EXPECT_THROW(cubic_conductor(-1, 0), ReducibleInput);
  // depressed x^3 + x^2 - 2x - 1 (conductor 7): A = -21, B = -7 after scaling
  EXPECT_EQ(*cubic_conductor(-21, -7), 7);
}

// Gaussian period cubic of conductor l: roots sum_{k in coset} 2cos(2 pi k / l).
IntPoly period_cubic(long l) {
  long g = 2;
  auto is_gen = [l](long c) {
    long x = 1;
    for (long i = 1; i < l - 1; ++i) {
      x = x * c % l;
      if (x == 1) return false;
    }
    return true;
  };
  while (!is_gen(g)) ++g;
  double eta[3] = {0, 0, 0};
  long x = 1;
  for (long i = 0; i < l - 1; ++i) {
    eta[i % 3] += std::cos(2 * M_PI * static_cast<double>(x) / static_cast<double>(l));
    x = x * g % l;
  }
  double e1 = eta[0] + eta[1] + eta[2];
  double e2 = eta[0] * eta[1] + eta[0] * eta[2] + eta[1] * eta[2];
  double e3 = eta[0] * eta[1] * eta[2];
  return IntPoly{-std::lround(e3), std::lround(e2), -std::lround(e1), 1};
}

TEST(CubicConductor, GaussianPeriods) {
  for (long l : {7L, 13L, 19L, 31L, 37L, 43L, 61L, 67L, 73L, 79L, 97L}) {
    IntPoly f = period_cubic(l);
    // depress: x -> x - a2/3 after scaling by 3
    Integer a2 = f[2], a1 = f[1], a0 = f[0];
    Integer A = 9 * a1 - 3 * a2 * a2, B = 2 * a2 * a2 * a2 - 9 * a2 * a1 + 27 * a0;
    auto c = cubic_conductor(A, B);
    ASSERT_TRUE(c.has_value()) << l;
    EXPECT_EQ(*c, l) << f.str();
    EXPECT_FALSE(is_layer_cubic(f));
  }
  EXPECT_TRUE(is_layer_cubic(IntPoly{1, -3, 0, 1}));
  EXPECT_TRUE(is_layer_cubic(IntPoly{-1, -3, 0, 1}));
}

TEST(Membership, ExactAndSampled) {
  auto t = layer_membership(IntPoly{2, 0, -4, 0, 1}, {2, 2});
  EXPECT_EQ(t.verdict, Membership::Yes);
  auto u = layer_membership(IntPoly{-2, 0, 0, 0, 1}, {2, 2});
  EXPECT_EQ(u.verdict, Membership::No);
  ASSERT_TRUE(u.witness.has_value());
  EXPECT_EQ(layer_membership(IntPoly{-2, 0, 1}, {2, 1}).method, "quadratic-discriminant");
  EXPECT_EQ(layer_membership(IntPoly{-3, 0, 1}, {2, 1}).verdict, Membership::No);
  EXPECT_EQ(layer_membership(IntPoly{1, -3, 0, 1}, {3, 1}).method, "cubic-conductor");
  EXPECT_EQ(layer_membership(layer_polynomial({3, 2}), {3, 2}).verdict, Membership::Yes);
  // x^9 layer with a different nonic: Q(zeta_19)^+ piece is not a 3-layer
  EXPECT_EQ(defines_layer(compose(IntPoly{1, -3, 0, 1}, IntPoly{0, 0, 1}) * IntPoly{0} + layer_polynomial({3, 2}), {3, 2})
                .verdict,
            Membership::Yes);
}

}  // namespace
}  // namespace ztower
