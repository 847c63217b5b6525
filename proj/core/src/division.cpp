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

#include "ztower/errors.hpp"

namespace ztower {

DivisionPolynomials::DivisionPolynomials(Integer A, Integer B) : A_(std::move(A)), B_(std::move(B)) {
  F_ = IntPoly(std::vector<Integer>{B_, A_, 0, 1});
  sixteen_F2_ = F_ * F_ * Integer(16);
  const Integer& a = A_;
  const Integer& b = B_;
  g_[0] = IntPoly{};
  g_[1] = IntPoly{1};
  g_[2] = IntPoly{1};
  g_[3] = IntPoly(std::vector<Integer>{-a * a, 12 * b, 6 * a, 0, 3});
  g_[4] = IntPoly(std::vector<Integer>{-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1}) *
          Integer(2);
}

DivisionPolynomials::DivisionPolynomials(const Curve& E)
    : DivisionPolynomials(E.short_model().A, E.short_model().B) {}

const IntPoly& DivisionPolynomials::reduced(int n) {
  if (n < 0) throw InputError("division polynomial index must be >= 0");
  if (auto it = g_.find(n); it != g_.end()) return it->second;
  const int m = n / 2;
  IntPoly r;
  if (n % 2) {
    IntPoly lhs = reduced(m + 2) * reduced(m) * reduced(m) * reduced(m);
    IntPoly rhs = reduced(m - 1) * reduced(m + 1) * reduced(m + 1) * reduced(m + 1);
    if (m % 2 == 0) {
      r = sixteen_F2_ * lhs - rhs;
    } else {
      r = lhs - sixteen_F2_ * rhs;
    }
  } else {
    IntPoly a = reduced(m + 2) * reduced(m - 1) * reduced(m - 1);
    IntPoly b = reduced(m - 2) * reduced(m + 1) * reduced(m + 1);
    r = reduced(m) * (a - b);
  }
  return g_[n] = std::move(r);
}

IntPoly DivisionPolynomials::torsion_x(int n) {
  if (n < 1) throw InputError("torsion index must be >= 1");
  if (n == 1) return IntPoly{1};
  if (n % 2) return reduced(n);
  return F_ * reduced(n);
}

const IntPoly& DivisionPolynomials::exact_order(int n) {
  if (n < 1) throw InputError("torsion order must be >= 1");
  if (auto it = f_.find(n); it != f_.end()) return it->second;
  IntPoly f = primitive_part(torsion_x(n));
  for (int d = 2; d < n; ++d) {
    if (n % d == 0) f = divide_over_q(f, exact_order(d));
  }
  return f_[n] = primitive_part(f);
}

IntPoly division_poly(const Curve& E, int n) { return DivisionPolynomials(E).reduced(n); }
IntPoly torsion_x_poly(const Curve& E, int n) { return DivisionPolynomials(E).torsion_x(n); }
IntPoly exact_order_poly(const Curve& E, int n) { return DivisionPolynomials(E).exact_order(n); }

}  // namespace ztower
