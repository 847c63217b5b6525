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

#include "ztower/torsion.hpp"

#include <numeric>
#include <regex>

#include "ztower/division.hpp"
#include "ztower/errors.hpp"
#include "ztower/factor.hpp"

namespace ztower {

long TorsionGroup::primary_part(long q) const {
  long part = 1;
  long k = order();
  while (k % q == 0) {
    k /= q;
    part *= q;
  }
  return part;
}

std::string TorsionGroup::str() const {
  if (n == 1) return "trivial";
  std::string cyc = "Z/" + std::to_string(n) + "Z";
  return m == 1 ? cyc : "Z/" + std::to_string(m) + "Z x " + cyc;
}

TorsionGroup TorsionGroup::parse(const std::string& s) {
  static const std::regex cyclic(R"(\s*Z/(\d+)Z\s*)");
  static const std::regex product(R"(\s*Z/(\d+)Z\s*(?:x|\+|⊕)\s*Z/(\d+)Z\s*)");
  std::smatch mt;
  TorsionGroup g;
  if (s == "trivial" || s == "0" || s == "O") return g;
  if (std::regex_match(s, mt, cyclic)) {
    g.n = std::stol(mt[1]);
  } else if (std::regex_match(s, mt, product)) {
    g.m = std::stol(mt[1]);
    g.n = std::stol(mt[2]);
  } else {
    throw InputError("cannot parse torsion group '" + s + "'");
  }
  if (g.m < 1 || g.n < 1 || g.n % g.m != 0 || g.m > 2) throw InputError("bad torsion group '" + s + "'");
  if (g.n == 1) g.m = 1;
  return g;
}

bool is_subgroup(const TorsionGroup& sub, const TorsionGroup& super) {
  return super.m % sub.m == 0 && super.n % sub.n == 0;
}

const std::vector<TorsionGroup>& mazur_list() {
  static const std::vector<TorsionGroup> list = [] {
    std::vector<TorsionGroup> v;
    for (long n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) v.push_back({1, n});
    for (long n : {2, 4, 6, 8}) v.push_back({2, n});
    return v;
  }();
  return list;
}

bool in_mazur_list(const TorsionGroup& g) {
  for (const auto& h : mazur_list()) {
    if (h == g) return true;
  }
  return false;
}

long torsion_order_bound(const Curve& E) {
  long bound = 0;
  int used = 0;
  for (std::uint32_t q : small_primes()) {
    if (q == 2) continue;
    if (!has_good_reduction(E, q)) continue;
    bound = std::gcd(bound, static_cast<long>(count_points(E, q)));
    if (++used == 8) break;
  }
  return bound;
}

namespace {

// A point of exact order n on the short model, if one is rational.
std::optional<Point> rational_point_of_order(DivisionPolynomials& dp, int n) {
  const IntPoly& f = dp.exact_order(n);
  for (const Rational& x : rational_roots(f)) {
    Rational rhs = dp.cubic()(x);
    if (auto y = rational_sqrt(rhs)) return Point::affine(x, *y);
  }
  return std::nullopt;
}

}  // namespace

TorsionData rational_torsion(const Curve& E) {
  const long bound = torsion_order_bound(E);
  const ShortModel& sm = E.short_model();
  const Curve S = Curve::short_weierstrass(Rational(sm.A), Rational(sm.B));
  DivisionPolynomials dp(sm.A, sm.B);

  std::vector<Point> two_torsion;
  for (const Rational& r : rational_roots(dp.cubic())) two_torsion.push_back(Point::affine(r, 0));

  Point gen = Point::at_infinity();
  long n = 1;
  // Largest prime powers allowed by Mazur's list.
  for (auto [ell, cap] : {std::pair<long, long>{2, 8}, {3, 9}, {5, 5}, {7, 7}}) {
    long top = 1;
    while (bound % (top * ell) == 0 && top * ell <= cap) top *= ell;
    for (long d = top; d > 1; d /= ell) {
      if (auto P = rational_point_of_order(dp, static_cast<int>(d))) {
        gen = add(S, gen, *P);
        n *= d;
        break;
      }
    }
  }

  TorsionData out;
  out.group.n = n;
  if (two_torsion.size() == 3) {
    out.group.m = 2;
    Point half = scalar_mul(S, n / 2, gen);
    for (const Point& T : two_torsion) {
      if (!(T == half)) {
        out.generators.push_back(E.from_short(T));
        break;
      }
    }
  }
  if (n > 1) out.generators.push_back(E.from_short(gen));

  if (!in_mazur_list(out.group) || bound % out.group.order() != 0) {
    throw InternalError("rational_torsion produced " + out.group.str() + " for " + E.str());
  }
  std::size_t gi = 0;
  if (out.group.m == 2 && point_order(E, out.generators[gi++]) != 2) {
    throw InternalError("rational_torsion: bad 2-torsion generator");
  }
  if (n > 1 && point_order(E, out.generators[gi]) != n) {
    throw InternalError("rational_torsion: generator order mismatch");
  }
  return out;
}

}  // namespace ztower
