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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ztower/arith.hpp"

namespace ztower {

// Dense univariate polynomial over Z, coefficients stored low degree first.
// The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const;

  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& k);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& k) { return a *= k; }
  friend IntPoly operator*(const Integer& k, IntPoly a) { return a *= k; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  // Divides every coefficient by k; throws if some division is inexact.
  IntPoly divexact(const Integer& k) const;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Canonical order used for factor lists: by degree, then coefficients from the top.
bool canonical_less(const IntPoly& a, const IntPoly& b);

IntPoly derivative(const IntPoly& f);
Integer content(const IntPoly& f);                  // >= 0
IntPoly primitive_part(const IntPoly& f);           // positive leading coefficient
IntPoly compose(const IntPoly& f, const IntPoly& g);  // f(g(x))

// Euclidean division when lc(b) = +-1, otherwise pseudo-division:
// lc(b)^lc_power * a = quotient * b + remainder, deg remainder < deg b.
struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
  unsigned lc_power = 0;
};
DivRem divrem(const IntPoly& a, const IntPoly& b);

// a / b when b divides a in Z[x].
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

// Division in Q[x] that must be exact up to content: returns the primitive
// part of a/b, throwing InternalError if b does not divide a over Q.
IntPoly divide_over_q(const IntPoly& a, const IntPoly& b);

IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive lc
Integer resultant(const IntPoly& f, const IntPoly& g);
Integer discriminant(const IntPoly& f);  // deg f >= 1

// Bivariate polynomial in (x, y): by_x[i] is the coefficient of x^i, a polynomial in y.
struct BiPoly {
  std::vector<IntPoly> by_x;
  int degree_x() const { return static_cast<int>(by_x.size()) - 1; }
  int degree_y() const;
};

// y^2 - F(x) as a bivariate polynomial.
BiPoly y_squared_minus(const IntPoly& F);

// Res_x(f, g) with g taken at its formal x-degree; a polynomial in y.
IntPoly resultant_x(const IntPoly& f, const BiPoly& g);

}  // namespace ztower
