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

#include "ztower/families.hpp"

#include <set>
#include <vector>

#include "ztower/division.hpp"
#include "ztower/errors.hpp"
#include "ztower/factor.hpp"
#include "ztower/tower.hpp"

namespace ztower {

std::string to_string(Family f) {
  switch (f) {
    case Family::Z2xZ2_over3: return "z2xz2-over3";
    case Family::Z3toZ2xZ6: return "z3-to-z2xz6";
    case Family::TrivToZ7: return "triv-to-z7";
    case Family::Z3toZ9: return "z3-to-z9";
    case Family::Z2xZ2_over2: return "z2xz2-over2";
    case Family::TwistBy2: return "twist2";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  static const std::pair<const char*, Family> names[] = {
      {"Z2xZ2_over3", Family::Z2xZ2_over3}, {"Z3toZ2xZ6", Family::Z3toZ2xZ6},
      {"TrivToZ7", Family::TrivToZ7},       {"Z3toZ9", Family::Z3toZ9},
      {"Z2xZ2_over2", Family::Z2xZ2_over2}, {"TwistBy2", Family::TwistBy2},
  };
  for (const auto& [name, f] : names) {
    if (s == name || s == to_string(f)) return f;
  }
  throw InputError("unknown family '" + s + "'");
}

bool uses_split_prime(Family f) {
  return f == Family::Z2xZ2_over3 || f == Family::Z3toZ2xZ6 || f == Family::TrivToZ7 || f == Family::Z3toZ9;
}

long tower_prime(Family f) { return uses_split_prime(f) ? 3 : 2; }

namespace {

Rational j_of(const Rational& A, const Rational& B) {
  Rational a3 = 4 * A * A * A;
  return 1728 * a3 / (a3 + 27 * B * B);
}

Rational j3(const Rational& h) { return (h + 27) * rpow(h + 3, 3) / h; }

Rational j7(const Rational& h) { return (h * h + 13 * h + 49) * rpow(h * h + 5 * h + 1, 3) / h; }

Rational ratio(const Integer& u, const Integer& v) {
  Rational r(u, v);
  r.canonicalize();
  return r;
}

// Squarefree class of N, assuming every prime at odd valuation divides one
// of the entries of base. The entries must factor completely.
Integer twist_class(const Rational& N, const std::vector<Integer>& base) {
  std::set<Integer> primes;
  for (Integer b : base) {
    b = abs(b);
    if (b <= 1) continue;
    Factored fb = factor_integer(b);
    if (!fb.complete()) throw TwistSelectionError("could not factor twist base element " + b.get_str());
    for (const auto& [q, e] : fb.primes) primes.insert(q);
  }
  Integer num = abs(N.get_num()), den = N.get_den();
  Integer d = sgn(N) < 0 ? -1 : 1;
  for (const Integer& q : primes) {
    unsigned e = 0;
    while (num % q == 0) { num /= q; ++e; }
    while (den % q == 0) { den /= q; ++e; }
    if (e % 2) d *= q;
  }
  if (!exact_sqrt(num) || !exact_sqrt(den)) {
    throw TwistSelectionError("norm has a prime at odd valuation outside the base (leftover " + num.get_str() + "/" +
                              den.get_str() + ")");
  }
  return d;
}

// First cubic factor of f_n defining Q_{1,3}.
IntPoly layer_cubic_factor(DivisionPolynomials& dp, int n) {
  for (const IntPoly& g : small_degree_factors(dp.exact_order(n), 3)) {
    if (g.degree() == 3 && is_layer_cubic(g)) return g;
  }
  throw InternalError("no cubic factor of f_" + std::to_string(n) + " defines Q_{1,3}");
}

// Norm from Q(g) of F(x) at a root of g: Res(g, F) / lc(g)^3.
Rational norm_of_cubic(const IntPoly& g, const IntPoly& F) {
  Integer lc = g.leading();
  return ratio(resultant(g, F), ipow(lc, static_cast<unsigned long>(F.degree())));
}

int default_k(Family f) { return f == Family::Z3toZ9 ? 3 : 2; }

FormId family_form(Family f) {
  switch (f) {
    case Family::Z2xZ2_over3:
    case Family::Z3toZ2xZ6: return FormId::U27;
    case Family::TrivToZ7: return FormId::F13;
    case Family::Z3toZ9: return FormId::F3;
    default: break;
  }
  throw InternalError("family has no form");
}

Curve short_curve(const Integer& A, const Integer& B) { return Curve::short_weierstrass(Rational(A), Rational(B)); }

void gen_u27(FamilyCurve& out, const FormSolution& s) {
  const Integer H = s.u * s.u, V = s.v * s.v;
  out.parameter = ratio(H, V);
  out.family_j = j3(out.parameter);
  // Family model twisted by (H^2 + 18HV - 27V^2)(H + 3V); same j.
  const Integer P3 = H + 3 * V, P27 = H + 27 * V, Dn = H * H + 18 * H * V - 27 * V * V;
  const Integer A = -27 * P3 * P27, B = 54 * P27 * Dn;
  const std::vector<Integer> base = {2, 3, s.u, s.v, P3, P27, Dn, out.p};
  if (out.family == Family::Z3toZ2xZ6) {
    DivisionPolynomials dp(A, B);
    auto roots = rational_roots(dp.exact_order(3));
    if (roots.empty()) throw InternalError("3-isogeny kernel has no rational x-coordinate");
    const Rational& x0 = roots.front();
    Rational F = x0 * x0 * x0 + A * x0 + B;
    out.twist = twist_class(F, base);
    out.expected_base = {1, 3};
    out.expected_tower = {2, 6};
  } else {
    out.twist = 1;
    static const long scan[] = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10, 11, -11, 13, -13};
    bool found = false;
    for (long d : scan) {
      if (rational_torsion(short_curve(A * d * d, B * d * d * d)).group.is_trivial()) {
        out.twist = d;
        found = true;
        break;
      }
    }
    if (!found) throw TwistSelectionError("no twist with trivial torsion among the scanned d");
    out.expected_base = {1, 1};
    out.expected_tower = {2, 2};
  }
  const Integer& d = out.twist;
  out.curve = short_curve(A * d * d, B * d * d * d);
}

void gen_triv_to_z7(FamilyCurve& out, const FormSolution& s) {
  const Integer &u = s.u, &v = s.v;
  out.parameter = ratio(u, v);
  out.family_j = j7(out.parameter);
  const Integer Q13 = u * u + 13 * u * v + 49 * v * v;
  const Integer Q5 = u * u + 5 * u * v + v * v;
  const Integer Dh = u * u * u * u + 14 * u * u * u * v + 63 * u * u * v * v + 70 * u * v * v * v - 7 * v * v * v * v;
  // Family model twisted by Q5 * Dh.
  const Integer A = -27 * Q5 * Q13, B = 54 * Q13 * Dh;
  DivisionPolynomials dp(A, B);
  IntPoly g = layer_cubic_factor(dp, 7);
  out.twist = twist_class(norm_of_cubic(g, dp.cubic()), {2, 3, 7, u, v, Q13, Q5, Dh, out.p});
  const Integer& d = out.twist;
  out.curve = short_curve(A * d * d, B * d * d * d);
  out.expected_base = {1, 1};
  out.expected_tower = {1, 7};
}

void gen_z3_to_z9(FamilyCurve& out, const FormSolution& s) {
  const Integer &u = s.u, &v = s.v;
  out.parameter = ratio(u, v);
  const Rational h3 = rpow(out.parameter, 3);
  out.family_j = j_of(-27 * rpow(out.parameter, 5) * rpow(h3 - 24, 5),
                      54 * rpow(out.parameter, 6) * rpow(h3 - 24, 6) * (h3 * h3 - 36 * h3 + 216));
  // Scaling by lambda = h (h^3 - 24) v^4 gives an isomorphic integral model.
  const Integer u3 = u * u * u, v3 = v * v * v;
  const Integer A = -27 * u * (u3 - 24 * v3);
  const Integer B = 54 * (u3 * u3 - 36 * u3 * v3 + 216 * v3 * v3);
  out.twist = 1;
  out.curve = short_curve(A, B);
  out.expected_base = {1, 3};
  out.expected_tower = {1, 9};
}

Curve tate_b_c(const Rational& b, const Rational& c) {
  return Curve::from_ainvs(std::array<Rational, 5>{1 - c, -b, -b, 0, 0});
}

}  // namespace

Curve tate_normal_form(int N, const Rational& t) {
  const Rational one = 1;
  switch (N) {
    case 3: return Curve::from_ainvs(std::array<Rational, 5>{t, 0, 1, 0, 0});
    case 4: return tate_b_c(t, 0);
    case 5: return tate_b_c(t, t);
    case 6: return tate_b_c(t + t * t, t);
    case 7: return tate_b_c(t * t * t - t * t, t * t - t);
    case 8: {
      if (t == 0) throw InputError("t = 0 is degenerate for N = 8");
      Rational b = (2 * t - 1) * (t - 1);
      return tate_b_c(b, b / t);
    }
    case 9: {
      Rational c = t * t * (t - 1);
      return tate_b_c(c * (t * t - t + 1), c);
    }
    case 10: {
      Rational q = t * t - 3 * t + 1;
      if (q == 0) throw InputError("degenerate parameter for N = 10");
      Rational b = t * t * t * (t - 1) * (2 * t - 1) / (q * q);
      Rational c = -t * (t - 1) * (2 * t - 1) / q;
      return tate_b_c(b, c);
    }
    case 12: {
      if (t == 1) throw InputError("t = 1 is degenerate for N = 12");
      Rational w = t - 1;
      Rational b = t * (2 * t - 1) * (2 * t * t - 2 * t + 1) * (3 * t * t - 3 * t + 1) / rpow(w, 4);
      Rational c = -t * (2 * t - 1) * (3 * t * t - 3 * t + 1) / rpow(w, 3);
      return tate_b_c(b, c);
    }
    default: break;
  }
  throw InputError("no Tate normal form for N = " + std::to_string(N));
}

FamilyCurve gen_curve(const FamilyParams& params) {
  FamilyCurve out;
  out.family = params.family;
  out.tower_p = tower_prime(params.family);
  if (uses_split_prime(params.family)) {
    if (params.p < 2 || !is_prime(static_cast<std::uint64_t>(params.p))) throw NotPrime(std::to_string(params.p));
    if (params.p % 3 != 1) throw InputError("p must be = 1 mod 3");
    out.p = params.p;
    int k = params.k.value_or(default_k(params.family));
    if (params.family == Family::Z3toZ9) {
      // For some primitive solutions the 9-isogeny kernel is already rational;
      // take the first one whose curve has Z/3 over Q.
      for (const FormSolution& s : form_solutions(FormId::F3, k, params.p)) {
        gen_z3_to_z9(out, s);
        if (rational_torsion(out.curve).group == out.expected_base) {
          out.form = s;
          return out;
        }
      }
      throw InternalError("no F3 solution gives Z/3 over Q for p=" + std::to_string(params.p));
    }
    out.form = solve_form(family_form(params.family), k, params.p);
    switch (params.family) {
      case Family::Z2xZ2_over3:
      case Family::Z3toZ2xZ6: gen_u27(out, *out.form); break;
      case Family::TrivToZ7: gen_triv_to_z7(out, *out.form); break;
      default: break;
    }
    return out;
  }

  out.parameter = params.t;
  if (params.family == Family::Z2xZ2_over2) {
    // y^2 = x^3 + c x^2 + c x with c = -2 / (t^2 - 1/2)
    if (params.t == 0) throw InputError("t = 0 gives a singular curve");
    Rational c = Rational(-4) / (2 * params.t * params.t - 1);
    out.curve = Curve::from_ainvs(std::array<Rational, 5>{0, c, 0, c, 0});
    out.family_j = 256 * rpow(c - 3, 3) / (c - 4);
    out.expected_base = {1, 2};
    out.expected_tower = {2, 2};
    return out;
  }

  // TwistBy2
  Curve E = tate_normal_form(params.N, params.t);
  TorsionData td = rational_torsion(E);
  if (td.group != TorsionGroup{1, params.N}) {
    throw InputError("t = " + params.t.get_str() + " gives torsion " + td.group.str() + ", not Z/" +
                     std::to_string(params.N) + "Z");
  }
  out.twist = 2;
  out.curve = quadratic_twist(E, 2);
  out.family_j = E.j_invariant();
  if (params.N % 2) {
    out.expected_base = {1, 1};
    out.expected_tower = {1, params.N};
  } else {
    out.expected_base = {1, 2};
    // Full 2-torsion over Q(sqrt 2) iff the quadratic cofactor of the 2-division
    // cubic has discriminant 2 times a square.
    const ShortModel& s = E.short_model();
    auto roots = rational_roots(s.cubic());
    const Rational& e = roots.front();
    // x^3 + A x + B = (x - e)(x^2 + e x + e^2 + A)
    Rational disc = e * e - 4 * (e * e + s.A);
    bool full = is_square(disc / 2);
    out.expected_tower = full ? TorsionGroup{2, params.N} : TorsionGroup{1, params.N};
  }
  return out;
}

}  // namespace ztower
