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

#include "ztower/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "ztower/errors.hpp"

namespace ztower {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (c_.empty()) throw DivisionByZero();
  return c_.back();
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rational IntPoly::operator()(const Rational& x) const {
  // Homogenised Horner keeps everything integral until the final division.
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = 0, qpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * p + *it * qpow;
    if (it + 1 != c_.rend()) qpow *= q;
  }
  if (c_.empty()) return 0;
  Rational r(acc, qpow);
  r.canonicalize();
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    mpz_srcptr ai = a.c_[i].get_mpz_t();
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= k;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::divexact(const Integer& k) const {
  IntPoly r = *this;
  for (auto& v : r.c_) {
    if (!mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t())) {
      throw InternalError("inexact coefficient division");
    }
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
  }
  return r;
}

std::string IntPoly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  return c == 1 ? f : f.divexact(c);
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
  IntPoly r;
  for (int i = f.degree(); i >= 0; --i) r = r * g + IntPoly::constant(f[i]);
  return r;
}

DivRem divrem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  DivRem out;
  if (a.degree() < b.degree()) {
    out.remainder = a;
    return out;
  }
  const Integer& lb = b.leading();
  const bool unit = (lb == 1 || lb == -1);
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Integer> q(dq + 1);
  if (!unit) {
    // Scale once so every step of the long division is exact.
    out.lc_power = static_cast<unsigned>(dq + 1);
    Integer s = ipow(lb, out.lc_power);
    for (auto& v : r) v *= s;
  }
  for (int k = dq; k >= 0; --k) {
    Integer& top = r[k + db];
    if (top == 0) continue;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[k] = t;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  r.resize(db);
  out.quotient = IntPoly(std::move(q));
  out.remainder = IntPoly(std::move(r));
  return out;
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  const Integer& lb = b.leading();
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Integer> q(dq + 1);
  for (int k = dq; k >= 0; --k) {
    Integer& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    q[k] = std::move(t);
  }
  for (int j = 0; j < db; ++j) {
    if (r[j] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly divide_over_q(const IntPoly& a, const IntPoly& b) {
  IntPoly bp = primitive_part(b);
  IntPoly ap = primitive_part(a);
  // Gauss: if bp | ap over Q then bp | ap over Z.
  auto q = exact_quotient(ap, bp);
  if (!q) throw InternalError("polynomial division over Q left a remainder");
  return primitive_part(*q);
}

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero()) return primitive_part(b_in);
  if (b_in.is_zero()) return primitive_part(a_in);
  Integer cg = gcd(content(a_in), content(b_in));
  IntPoly a = primitive_part(a_in), b = primitive_part(b_in);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = divrem(a, b).remainder;
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a) * cg;
}

namespace {

// Remainder of lc(b)^(deg a - deg b + 1) * a by b.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
  DivRem d = divrem(a, b);
  const unsigned want = static_cast<unsigned>(a.degree() - b.degree() + 1);
  if (d.lc_power == want) return d.remainder;
  return d.remainder * ipow(b.leading(), want - d.lc_power);
}

}  // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPoly A = f, B = g;
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() % 2) && (B.degree() % 2)) s = -s;
  }
  if (B.degree() == 0) return s * ipow(B[0], A.degree());
  Integer a = content(A), b = content(B);
  Integer t = ipow(a, B.degree()) * ipow(b, A.degree());
  A = A.divexact(a);
  B = B.divexact(b);
  Integer gg = 1, h = 1;
  // Subresultant PRS.
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() % 2) && (B.degree() % 2)) s = -s;
    IntPoly R = prem(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    B = R.divexact(gg * ipow(h, delta));
    gg = A.leading();
    if (delta == 1) {
      h = gg;
    } else if (delta > 1) {
      Integer num = ipow(gg, delta), den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.degree() == 0) {
      const int da = A.degree();
      Integer num = ipow(B[0], da), den = ipow(h, da - 1), r;
      mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * r;
    }
  }
}

Integer discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw InputError("discriminant of a constant");
  Integer r = resultant(f, derivative(f));
  Integer d = r / f.leading();
  if ((n * (n - 1) / 2) % 2) d = -d;
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& p : by_x) d = std::max(d, p.degree());
  return d;
}

BiPoly y_squared_minus(const IntPoly& F) {
  BiPoly g;
  g.by_x.resize(std::max<std::size_t>(F.size(), 1));
  for (std::size_t i = 0; i < F.size(); ++i) g.by_x[i] = IntPoly::constant(-F[i]);
  g.by_x[0] += IntPoly::monomial(1, 2);
  return g;
}

IntPoly resultant_x(const IntPoly& f, const BiPoly& g) {
  const int m = f.degree();
  const int n = g.degree_x();
  if (m < 0 || n < 0) return {};
  const int dy = m * std::max(g.degree_y(), 0);
  // Evaluate at y = 0..dy and interpolate (Newton form over Q).
  std::vector<Rational> vals(dy + 1);
  for (int k = 0; k <= dy; ++k) {
    std::vector<Integer> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = g.by_x[i](Integer(k));
    IntPoly gk(std::move(c));
    if (gk.is_zero()) {
      vals[k] = 0;
      continue;
    }
    Integer r = resultant(f, gk);
    if (gk.degree() < n) r *= ipow(f.leading(), n - gk.degree());
    vals[k] = r;
  }
  std::vector<Rational> dd = vals;
  for (int j = 1; j <= dy; ++j) {
    for (int k = dy; k >= j; --k) dd[k] = (dd[k] - dd[k - 1]) / Rational(j);
  }
  // Expand sum dd[j] * prod_{k<j} (y - k).
  std::vector<Rational> poly(dy + 1, Rational(0));
  for (int j = dy; j >= 0; --j) {
    // poly = poly * (y - j) + dd[j]
    std::vector<Rational> next(dy + 1, Rational(0));
    for (int i = 0; i < dy; ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * j;
    }
    next[0] += dd[j];
    poly = std::move(next);
  }
  std::vector<Integer> out(dy + 1);
  for (int i = 0; i <= dy; ++i) out[i] = rational_to_integer(poly[i]);
  return IntPoly(std::move(out));
}

}  // namespace ztower
