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

#include <map>

#include "ztower/curve.hpp"
#include "ztower/int_poly.hpp"

namespace ztower {

// Division polynomials of y^2 = x^3 + A x + B with memoisation.
// Not thread safe; use one instance per thread.
class DivisionPolynomials {
 public:
  DivisionPolynomials(Integer A, Integer B);
  explicit DivisionPolynomials(const Curve& E);

  const Integer& A() const { return A_; }
  const Integer& B() const { return B_; }
  const IntPoly& cubic() const { return F_; }

  // psi_n for odd n and psi_n / (2y) for even n; a polynomial in x.
  const IntPoly& reduced(int n);
  // Vanishes exactly at x-coordinates of nonzero n-torsion points (simple roots).
  IntPoly torsion_x(int n);
  // Primitive polynomial whose roots are the x-coordinates of points of exact order n.
  const IntPoly& exact_order(int n);

 private:
  Integer A_, B_;
  IntPoly F_, sixteen_F2_;
  std::map<int, IntPoly> g_;
  std::map<int, IntPoly> f_;
};

IntPoly division_poly(const Curve& E, int n);
IntPoly torsion_x_poly(const Curve& E, int n);
IntPoly exact_order_poly(const Curve& E, int n);

}  // namespace ztower
