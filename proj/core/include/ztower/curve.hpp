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

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ztower/arith.hpp"
#include "ztower/int_poly.hpp"

namespace ztower {

// Affine point or the point at infinity.
struct Point {
  bool infinity = true;
  Rational x, y;

  static Point at_infinity() { return {}; }
  static Point affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const Point& a, const Point& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  std::string str() const;
};

// Integral short model Y^2 = X^3 + A X + B isomorphic to the curve:
// X = (36x + 3 b2) / mu^2, Y = 108 (2y + a1 x + a3) / mu^3.
struct ShortModel {
  Integer A, B;
  Rational mu;
  IntPoly cubic() const { return IntPoly(std::vector<Integer>{B, A, 0, 1}); }
};

class Curve {
 public:
  // Generalized Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
  static Curve from_ainvs(const std::array<Rational, 5>& a);
  static Curve from_ainvs(const std::array<long, 5>& a);
  static Curve short_weierstrass(const Rational& A, const Rational& B);

  const std::array<Rational, 5>& ainvs() const { return a_; }
  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }
  const Rational& b2() const { return b2_; }
  const Rational& b4() const { return b4_; }
  const Rational& b6() const { return b6_; }
  const Rational& b8() const { return b8_; }
  const Rational& c4() const { return c4_; }
  const Rational& c6() const { return c6_; }
  const Rational& discriminant() const { return disc_; }
  const Rational& j_invariant() const { return j_; }

  const ShortModel& short_model() const { return short_; }
  // a-invariants scaled by u^i so that all are integers.
  const std::array<Integer, 5>& integral_ainvs() const { return int_a_; }
  const Integer& integral_discriminant() const { return int_disc_; }

  bool contains(const Point& P) const;
  Point to_short(const Point& P) const;    // onto the short model
  Point from_short(const Point& P) const;  // back from the short model

  std::string str() const;

 private:
  std::array<Rational, 5> a_;
  Rational b2_, b4_, b6_, b8_, c4_, c6_, disc_, j_;
  ShortModel short_;
  std::array<Integer, 5> int_a_;
  Integer int_disc_;
};

Point negate(const Curve& E, const Point& P);
Point add(const Curve& E, const Point& P, const Point& Q);
Point scalar_mul(const Curve& E, long n, const Point& P);
// Exact order of a torsion point; 0 if the order exceeds limit.
long point_order(const Curve& E, const Point& P, long limit = 64);

// y^2 = x^3 + A d^2 x + B d^3 built from the integral short model; d != 0.
Curve quadratic_twist(const Curve& E, const Integer& d);

// #E(F_q) for an odd prime q of good reduction of the integral model, q < 10^6.
std::uint64_t count_points(const Curve& E, std::uint64_t q);
bool has_good_reduction(const Curve& E, std::uint64_t q);

}  // namespace ztower
