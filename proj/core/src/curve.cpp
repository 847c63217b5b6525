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

#include <sstream>

#include "ztower/errors.hpp"

namespace ztower {

std::string Point::str() const {
  if (infinity) return "O";
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

Curve Curve::from_ainvs(const std::array<long, 5>& a) {
  return from_ainvs({Rational(a[0]), Rational(a[1]), Rational(a[2]), Rational(a[3]), Rational(a[4])});
}

Curve Curve::short_weierstrass(const Rational& A, const Rational& B) {
  return from_ainvs({Rational(0), Rational(0), Rational(0), A, B});
}

Curve Curve::from_ainvs(const std::array<Rational, 5>& a) {
  Curve E;
  E.a_ = a;
  const auto& [a1, a2, a3, a4, a6] = a;
  E.b2_ = a1 * a1 + 4 * a2;
  E.b4_ = 2 * a4 + a1 * a3;
  E.b6_ = a3 * a3 + 4 * a6;
  E.b8_ = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  E.c4_ = E.b2_ * E.b2_ - 24 * E.b4_;
  E.c6_ = -E.b2_ * E.b2_ * E.b2_ + 36 * E.b2_ * E.b4_ - 216 * E.b6_;
  E.disc_ = -E.b2_ * E.b2_ * E.b8_ - 8 * E.b4_ * E.b4_ * E.b4_ - 27 * E.b6_ * E.b6_ + 9 * E.b2_ * E.b4_ * E.b6_;
  if (E.disc_ == 0) throw SingularCurve();
  E.j_ = E.c4_ * E.c4_ * E.c4_ / E.disc_;

  // Short model: clear denominators, then strip d with d^4 | A, d^6 | B.
  Rational A0 = -27 * E.c4_, B0 = -54 * E.c6_;
  Integer s;
  mpz_lcm(s.get_mpz_t(), A0.get_den().get_mpz_t(), B0.get_den().get_mpz_t());
  Integer A = rational_to_integer(A0 * Rational(ipow(s, 4))), B = rational_to_integer(B0 * Rational(ipow(s, 6)));
  Integer d = 1;
  for (std::uint32_t p : small_primes()) {
    Integer p4 = ipow(Integer(p), 4), p6 = ipow(Integer(p), 6);
    while (mpz_divisible_p(A.get_mpz_t(), p4.get_mpz_t()) && mpz_divisible_p(B.get_mpz_t(), p6.get_mpz_t())) {
      A /= p4;
      B /= p6;
      d *= p;
    }
    if (p > 1000 && abs(A) < p4 && abs(B) < p6) break;
  }
  E.short_.A = A;
  E.short_.B = B;
  E.short_.mu = Rational(d, s);
  E.short_.mu.canonicalize();

  Integer u = 1;
  for (const auto& ai : a) mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), ai.get_den().get_mpz_t());
  const unsigned long weights[5] = {1, 2, 3, 4, 6};
  for (int i = 0; i < 5; ++i) E.int_a_[i] = rational_to_integer(a[i] * Rational(ipow(u, weights[i])));
  E.int_disc_ = rational_to_integer(E.disc_ * Rational(ipow(u, 12)));
  return E;
}

bool Curve::contains(const Point& P) const {
  if (P.infinity) return true;
  const auto& [a1, a2, a3, a4, a6] = a_;
  const Rational& x = P.x;
  const Rational& y = P.y;
  return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
}

Point Curve::to_short(const Point& P) const {
  if (P.infinity) return P;
  const Rational mu2 = short_.mu * short_.mu;
  const Rational mu3 = mu2 * short_.mu;
  return Point::affine((36 * P.x + 3 * b2_) / mu2, 108 * (2 * P.y + a1() * P.x + a3()) / mu3);
}

Point Curve::from_short(const Point& P) const {
  if (P.infinity) return P;
  const Rational mu2 = short_.mu * short_.mu;
  const Rational mu3 = mu2 * short_.mu;
  Rational x = (P.x * mu2 - 3 * b2_) / 36;
  Rational y = ((P.y * mu3) / 108 - a1() * x - a3()) / 2;
  return Point::affine(x, y);
}

std::string Curve::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << a_[i].get_str();
  os << "]";
  return os.str();
}

Point negate(const Curve& E, const Point& P) {
  if (P.infinity) return P;
  return Point::affine(P.x, -P.y - E.a1() * P.x - E.a3());
}

Point add(const Curve& E, const Point& P, const Point& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const auto& [a1, a2, a3, a4, a6] = E.ainvs();
  Rational lambda, nu;
  if (P.x == Q.x) {
    Rational denom = P.y + Q.y + a1 * Q.x + a3;
    if (denom == 0) return Point::at_infinity();
    lambda = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) / denom;
    nu = (-P.x * P.x * P.x + a4 * P.x + 2 * a6 - a3 * P.y) / denom;
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
    nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
  }
  Rational x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
  Rational y3 = -(lambda + a1) * x3 - nu - a3;
  return Point::affine(x3, y3);
}

Point scalar_mul(const Curve& E, long n, const Point& P) {
  if (n < 0) return scalar_mul(E, -n, negate(E, P));
  Point result = Point::at_infinity(), base = P;
  while (n) {
    if (n & 1) result = add(E, result, base);
    n >>= 1;
    if (n) base = add(E, base, base);
  }
  return result;
}

long point_order(const Curve& E, const Point& P, long limit) {
  Point Q = P;
  for (long k = 1; k <= limit; ++k) {
    if (Q.infinity) return k;
    Q = add(E, Q, P);
  }
  return 0;
}

Curve quadratic_twist(const Curve& E, const Integer& d) {
  if (d == 0) throw InputError("quadratic twist by 0");
  const ShortModel& s = E.short_model();
  return Curve::short_weierstrass(Rational(s.A * d * d), Rational(s.B * d * d * d));
}

bool has_good_reduction(const Curve& E, std::uint64_t q) {
  return mpz_fdiv_ui(E.integral_discriminant().get_mpz_t(), q) != 0;
}

std::uint64_t count_points(const Curve& E, std::uint64_t q) {
  if (q < 3 || q >= 1000000 || !is_prime(q)) throw InputError("count_points needs an odd prime below 10^6");
  if (!has_good_reduction(E, q)) throw BadReduction("bad reduction at " + std::to_string(q));
  const auto& a = E.integral_ainvs();
  auto red = [q](const Integer& v) { return static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), q)); };
  const std::uint64_t a1 = red(a[0]), a2 = red(a[1]), a3 = red(a[2]), a4 = red(a[3]), a6 = red(a[4]);
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  const std::uint64_t b2 = (a1 * a1 + 4 * a2) % q;
  const std::uint64_t b4 = (2 * a4 + a1 * a3) % q;
  const std::uint64_t b6 = (a3 * a3 + 4 * a6) % q;
  std::vector<signed char> chi(q, -1);
  chi[0] = 0;
  for (std::uint64_t t = 1; t < q; ++t) chi[t * t % q] = 1;
  std::int64_t count = 1;
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t v = (((4 * x + b2) % q * x + 2 * b4) % q * x + b6) % q;
    count += 1 + chi[v];
  }
  return static_cast<std::uint64_t>(count);
}

}  // namespace ztower
