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

#include "ztower/classifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ztower/division.hpp"
#include "ztower/errors.hpp"
#include "ztower/factor.hpp"

namespace ztower {
namespace {

const std::map<std::string, std::string>& citation_table() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (auto& [k, v] : mechanisms()) t[k] = v;
    return t;
  }();
  return table;
}

Evidence make(const std::string& claim, const std::string& tag,
              std::vector<std::pair<std::string, std::string>> witness = {}) {
  auto it = citation_table().find(tag);
  if (it == citation_table().end()) throw InternalError("unknown mechanism tag " + tag);
  return Evidence{claim, tag, it->second, std::move(witness)};
}

std::string coeff_list(const IntPoly& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i].get_str();
  return os.str();
}

IntPoly parse_coeff_list(const std::string& s) {
  std::vector<Integer> c;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) c.emplace_back(item);
  return IntPoly(std::move(c));
}

int vp(long n, long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long euler_phi(long n) {
  long r = n;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

// Level of definition for a point of order n with cyclic n-torsion.
int layer_of_definition(long n, long p) { return vp(euler_phi(n), p); }

long ipow_long(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct PointWitness {
  int level = 0;
  IntPoly x_factor, y_factor;
  LayerTest x_test, y_test;
};

struct Search {
  std::optional<PointWitness> best;  // lowest level
  bool inconclusive = false;
  std::vector<int> degrees;  // degrees of the factors examined
};

// Looks for a point of exact order n over Q_{max_level,p}: an irreducible
// factor g of f_n with deg g = p^i whose field is Q_{i,p}, and an irreducible
// factor h of Res_x(g, y^2 - F) with deg h = p^j whose field is Q_{j,p}.
Search search_points(DivisionPolynomials& dp, int n, long p, int max_level, int sample_size) {
  Search out;
  const long max_deg = ipow_long(p, max_level);
  const IntPoly& f = dp.exact_order(n);
  const BiPoly curve = y_squared_minus(dp.cubic());
  auto level_of = [p](int d) -> int {
    int i = 0;
    long v = 1;
    while (v < d) {
      v *= p;
      ++i;
    }
    return v == d ? i : -1;
  };
  for (const IntPoly& g : small_degree_factors(f, static_cast<int>(max_deg))) {
    const int i = level_of(g.degree());
    if (i < 0) continue;
    out.degrees.push_back(g.degree());
    if (out.best && out.best->level <= i) continue;
    LayerTest xt = layer_membership(g, LayerField{p, i}, sample_size);
    if (xt.verdict == Membership::Inconclusive) out.inconclusive = true;
    if (xt.verdict != Membership::Yes) continue;
    IntPoly R = resultant_x(g, curve);
    for (const IntPoly& h : small_degree_factors(R, static_cast<int>(max_deg))) {
      const int j = level_of(h.degree());
      if (j < 0) continue;
      const int level = std::max(i, j);
      if (out.best && out.best->level <= level) continue;
      LayerTest yt = layer_membership(h, LayerField{p, j}, sample_size);
      if (yt.verdict == Membership::Inconclusive) out.inconclusive = true;
      if (yt.verdict != Membership::Yes) continue;
      out.best = PointWitness{level, g, h, xt, yt};
    }
  }
  if (out.best) out.inconclusive = false;
  return out;
}

std::string degree_list(const std::vector<int>& d) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << "]";
  return os.str();
}

class Classifier {
 public:
  Classifier(const Curve& E, long p, const ClassifyOptions& opts)
      : E_(E), p_(p), opts_(opts), dp_(E.short_model().A, E.short_model().B) {}

  GrowthReport run();

 private:
  // Records the outcome of a search for order n; returns the level if found.
  std::optional<int> find(int n, int max_level);
  void exclude(const std::string& claim, const std::string& tag) { r_.evidence.push_back(make(claim, tag)); }
  void p2();
  void p3();
  void growth_level(std::optional<int> level) {
    if (level && *level > 0) max_level_ = std::max(max_level_, *level);
  }
  void finish();

  const Curve& E_;
  long p_;
  ClassifyOptions opts_;
  DivisionPolynomials dp_;
  GrowthReport r_;
  int max_level_ = 0;
};

std::optional<int> Classifier::find(int n, int max_level) {
  Search s = search_points(dp_, n, p_, max_level, opts_.sample_size);
  const std::string where = LayerField{p_, max_level}.str();
  if (s.best) {
    const PointWitness& w = *s.best;
    r_.evidence.push_back(make("point of order " + std::to_string(n) + " over " + LayerField{p_, w.level}.str(),
                               "division-factor-in-layer",
                               {{"n", std::to_string(n)},
                                {"level", std::to_string(w.level)},
                                {"x_factor", w.x_factor.str()},
                                {"x_coeffs", coeff_list(w.x_factor)},
                                {"x_test", w.x_test.method},
                                {"y_factor", w.y_factor.str('y')},
                                {"y_coeffs", coeff_list(w.y_factor)},
                                {"y_test", w.y_test.method}}));
    return w.level;
  }
  if (s.inconclusive) {
    r_.verdict = Verdict::Unresolved;
    r_.evidence.push_back(make("order " + std::to_string(n) + " over " + where + " undecided", "sampling-inconclusive",
                               {{"n", std::to_string(n)}, {"factor_degrees", degree_list(s.degrees)}}));
    return std::nullopt;
  }
  r_.evidence.push_back(make("no point of order " + std::to_string(n) + " over " + where, "division-factor-search",
                             {{"n", std::to_string(n)},
                              {"max_level", std::to_string(max_level)},
                              {"factor_degrees", degree_list(s.degrees)}}));
  return std::nullopt;
}

void Classifier::p2() {
  const TorsionGroup& base = r_.base;
  exclude("no 11- or 37-torsion over Q_{inf,2}", "degree-table");
  exclude("no 13-torsion over Q_{inf,2}", "no-13-p2");
  exclude("no 17-torsion over Q_{inf,2}", "no-17-p2");
  exclude("no q-torsion over Q_{inf,2} for other primes q > 7", "isogeny-bound");

  // 7 excludes everything else.
  bool has7 = base.primary_part(7) == 7;
  std::optional<int> lvl7;
  if (!has7) {
    lvl7 = find(7, layer_of_definition(7, 2));
    has7 = lvl7.has_value();
  }
  if (has7) {
    exclude("7-torsion over Q_{inf,2} forces the group Z/7Z", "seven-isolated-p2");
    r_.tower = {1, 7};
    growth_level(lvl7);
    return;
  }

  bool has5 = base.primary_part(5) == 5;
  std::optional<int> lvl5;
  if (!has5) {
    lvl5 = find(5, layer_of_definition(5, 2));
    has5 = lvl5.has_value();
  }
  if (has5) {
    exclude("5-torsion over Q_{inf,2}: no 3-torsion and no 2-torsion growth", "five-cap-p2");
    r_.tower = {base.m, 5 * base.primary_part(2)};
    growth_level(lvl5);
    return;
  }

  // 3-primary part.
  long n3 = base.primary_part(3);
  if (n3 == 1) {
    auto l = find(3, layer_of_definition(3, 2));
    if (l) {
      n3 = 3;
      growth_level(l);
    }
  }
  if (n3 == 3) {
    auto l = find(9, layer_of_definition(9, 2));
    if (l) {
      n3 = 9;
      growth_level(l);
    }
  }
  if (n3 == 9) {
    exclude("9-torsion over Q_{inf,2} forces the group Z/9Z", "nine-isolated-p2");
    r_.tower = {1, 9};
    return;
  }
  exclude("no 27-torsion over Q_{inf,2}", "nine-isolated-p2");

  // 2-primary part, bounded by Z/2 x Z/8.
  exclude("2-primary torsion over Q_{inf,2} is inside Z/2Z x Z/8Z", "two-power-bound-p2");
  long m = 1, n2 = 1;
  const IntPoly& F = dp_.cubic();
  auto roots = rational_roots(F);
  if (roots.empty()) {
    exclude("2-division field has degree divisible by 3", "cubic-two-division");
  } else {
    n2 = 2;
    if (roots.size() == 3) {
      m = 2;
    } else {
      IntPoly quad = divide_over_q(F, IntPoly(std::vector<Integer>{-roots[0].get_num(), roots[0].get_den()}));
      LayerTest t = layer_membership(quad, LayerField{2, 1});
      if (t.verdict == Membership::Yes) {
        m = 2;
        growth_level(1);
        r_.evidence.push_back(make("full 2-torsion over Q_{1,2}", "division-factor-in-layer",
                                   {{"n", "2"},
                                    {"level", "1"},
                                    {"x_factor", quad.str()},
                                    {"x_coeffs", coeff_list(quad)},
                                    {"x_test", t.method}}));
      } else {
        r_.evidence.push_back(make("2-division field is not Q(sqrt 2)", "division-factor-search",
                                   {{"n", "2"}, {"max_level", "1"}, {"factor_degrees", "[1,2]"}}));
      }
    }
    const bool with3 = n3 == 3;
    if (with3 && m == 2) {
      exclude("no Z/2Z x Z/12Z over Q_{inf,2}", "no-z2-z12-p2");
    } else {
      long c = base.primary_part(2) / base.m;  // cyclic 2-part of the base
      if (c >= 4) {
        n2 = c;
      } else if (auto l = find(4, 3)) {
        n2 = 4;
        growth_level(l);
      }
      if (n2 == 4) {
        if (with3) {
          exclude("no 24-torsion over Q_{inf,2}", "twelve-cap-p2");
        } else if (c >= 8) {
          n2 = 8;
        } else if (auto l8 = find(8, 3)) {
          n2 = 8;
          growth_level(l8);
        }
      }
    }
  }
  r_.tower = {m, n2 * n3};
}

void Classifier::p3() {
  const TorsionGroup& base = r_.base;
  exclude("no 11- or 37-torsion over Q_{inf,3}", "degree-table");
  exclude("no 13-torsion over Q_{inf,3}", "no-13-p3");
  exclude("no 19-torsion over Q_{inf,3}", "no-19-p3");
  exclude("5-torsion does not grow over Q_{inf,3}", "five-static-p3");
  exclude("no q-torsion over Q_{inf,3} for other primes q > 7", "isogeny-bound");

  const long b2 = base.primary_part(2), b3 = base.primary_part(3), b5 = base.primary_part(5);

  // 7-torsion.
  bool has7 = base.primary_part(7) == 7;
  std::optional<int> lvl7;
  if (!has7) {
    if (b2 > 1) {
      exclude("no 14-torsion over Q_{inf,3}", "no-14-p3");
    } else if (b5 > 1) {
      exclude("no 35-torsion over Q_{inf,3}", "tower-list");
    } else if (b3 > 3) {
      exclude("no 63-torsion over Q_{inf,3}", "tower-list");
    } else {
      lvl7 = find(7, layer_of_definition(7, 3));
      has7 = lvl7.has_value();
    }
  }
  if (has7) {
    exclude("7-torsion over Q_{inf,3} forces Z/7Z or Z/21Z", "seven-cases-p3");
    r_.tower = {1, 7 * b3};
    growth_level(lvl7);
    return;
  }

  // 2-primary part.
  long m = base.m, n2 = b2 / base.m;
  if (b2 > 1) {
    exclude("2-primary torsion does not grow over Q_{inf,3} when E(Q)[2] is nontrivial", "two-power-p3");
  } else {
    const IntPoly& F = dp_.cubic();
    const bool layer = is_layer_cubic(F);
    if (layer) {
      m = 2;
      n2 = 2;
      growth_level(1);
      r_.evidence.push_back(make("full 2-torsion over Q_{1,3}", "division-factor-in-layer",
                                 {{"n", "2"},
                                  {"level", "1"},
                                  {"x_factor", F.str()},
                                  {"x_coeffs", coeff_list(F)},
                                  {"x_test", "cubic-conductor"}}));
    } else {
      r_.evidence.push_back(make("2-division field is not Q_{1,3}", "two-power-p3",
                                 {{"x_factor", F.str()}, {"x_test", "cubic-conductor"}}));
    }
  }

  // 3-primary part: never appears from nothing.
  long n3 = b3;
  if (b3 == 1) {
    exclude("3-torsion over Q_{inf,3} is rational", "cyclic-three-p3");
  } else {
    if (n3 == 3) {
      if (m == 2) {
        exclude("no Z/2Z x Z/18Z over Q_{inf,3}", "no-18-p3");
      } else if (n2 > 1) {
        exclude("no 18-torsion over Q_{inf,3}", "no-18-p3");
      } else if (auto l = find(9, layer_of_definition(9, 3))) {
        n3 = 9;
        growth_level(l);
      }
    }
    if (n3 == 9) {
      if (E_.j_invariant() == j_27_isogeny()) {
        if (auto l = find(27, layer_of_definition(27, 3))) {
          n3 = 27;
          growth_level(l);
        }
      } else {
        exclude("no 27-torsion: j differs from -2^15*3*5^3", "twenty-seven-isogeny");
      }
    }
  }
  r_.tower = {m, n2 * n3 * b5};
}

void Classifier::finish() {
  const TorsionGroup& t = r_.tower;
  if (!is_subgroup(r_.base, t)) {
    throw InternalError("classifier: base " + r_.base.str() + " not inside tower " + t.str());
  }
  if (p_ == 2 || p_ == 3) {
    const auto& list = tower_groups(p_);
    if (std::find(list.begin(), list.end(), t) == list.end()) {
      throw InternalError("classifier: tower " + t.str() + " outside the admissible list");
    }
  } else if (!(t == r_.base)) {
    throw InternalError("classifier: growth for p >= 5");
  }
  // Cyclic prime-power orders allowed by the isogeny bound.
  long n = t.n;
  for (long q = 2; q <= n; ++q) {
    if (n % q) continue;
    long qq = 1;
    while (n % q == 0) {
      n /= q;
      qq *= q;
    }
    if (!isogeny_prime_powers().count(qq)) throw InternalError("classifier: cyclic order violates isogeny bound");
  }
  r_.evidence.push_back(make("tower torsion is " + t.str(), "tower-list"));
  if (!(t == r_.base) && r_.verdict == Verdict::Resolved) r_.layer_of_growth = max_level_;
}

GrowthReport Classifier::run() {
  if (p_ < 2 || !is_prime(static_cast<std::uint64_t>(p_))) throw NotPrime(std::to_string(p_));
  r_.p = p_;
  r_.base = rational_torsion(E_).group;
  r_.tower = r_.base;
  if (p_ >= 5) {
    r_.evidence.push_back(make("E(Q_{inf," + std::to_string(p_) + "})_tors = E(Q)_tors", "p-at-least-5"));
  } else if (p_ == 2) {
    p2();
  } else {
    p3();
  }
  finish();
  return r_;
}

}  // namespace

std::string Evidence::witness_value(const std::string& key) const {
  for (const auto& [k, v] : witness) {
    if (k == key) return v;
  }
  return {};
}

std::string to_string(Verdict v) { return v == Verdict::Resolved ? "resolved" : "unresolved"; }

Rational j_27_isogeny() { return Rational(-12288000); }

const std::vector<std::pair<std::string, std::string>>& mechanisms() {
  static const std::vector<std::pair<std::string, std::string>> m = {
      {"p-at-least-5", "for p >= 5 no torsion point of E(Q_{inf,p}) is irrational"},
      {"division-factor-in-layer",
       "an irreducible factor of the exact-order division polynomial and a factor of its y-resultant both "
       "generate layers of the tower"},
      {"division-factor-search",
       "no irreducible factor of the exact-order division polynomial of admissible p-power degree yields a point "
       "over the layer of definition m = v_p(phi(n))"},
      {"sampling-inconclusive", "layer membership could not be decided below the prime cap"},
      {"degree-table", "the admissible degrees [Q(P):Q] of points of prime order q contain no power of p"},
      {"isogeny-bound", "cyclic q-power torsion over Q_{inf,p} needs a rational q-power isogeny"},
      {"no-13-p2", "there are no points of order 13 over Q_{inf,2}"},
      {"no-17-p2", "there are no points of order 17 over Q_{inf,2}"},
      {"seven-isolated-p2", "a point of order 7 over Q_{inf,2} forces E(Q_{inf,2})_tors = Z/7Z"},
      {"five-cap-p2", "a point of order 5 over Q_{inf,2} forces Z/5Z or Z/10Z with no growth of the 2-part"},
      {"nine-isolated-p2", "a point of order 9 over Q_{inf,2} forces E(Q_{inf,2})_tors = Z/9Z"},
      {"two-power-bound-p2", "E(Q_{inf,2})[2^inf] is contained in Z/2Z x Z/8Z"},
      {"cubic-two-division", "an irreducible 2-division cubic has no root in a 2-power extension"},
      {"no-z2-z12-p2", "Z/2Z x Z/12Z does not occur over Q_{inf,2}"},
      {"twelve-cap-p2", "points of order 24 do not occur over Q_{inf,2}"},
      {"no-13-p3", "there are no points of order 13 over Q_{inf,3}"},
      {"no-19-p3", "there are no points of order 19 over Q_{inf,3}"},
      {"five-static-p3", "if E(Q)[5] = 0 then E(Q_{inf,3})[5] = 0, and 25-torsion does not appear"},
      {"no-14-p3", "X_1(14) has no new points over Q_{1,3}"},
      {"seven-cases-p3", "7-torsion over Q_{inf,3} forces Z/7Z, or Z/21Z for the single curve 162b1"},
      {"two-power-p3", "2-primary torsion over Q_{inf,3} grows only to Z/2Z x Z/2Z, via a 2-division field equal to Q_{1,3}"},
      {"cyclic-three-p3", "a point of order 3 defined over a cyclic 3-power extension is rational"},
      {"no-18-p3", "there are no points of order 18 over Q_{inf,3}"},
      {"twenty-seven-isogeny", "27-torsion over Q_{inf,3} needs a rational 27-isogeny, so j = -12288000"},
      {"tower-list", "the result lies in the list of groups possible over Q_{inf,p}"},
  };
  return m;
}

const std::set<long>& admissible_degrees(long q) {
  static const std::map<long, std::set<long>> table = {
      {2, {1, 2, 3}},
      {3, {1, 2, 3, 4, 6, 8}},
      {5, {1, 2, 4, 5, 8, 10, 16, 20, 24}},
      {7, {1, 2, 3, 6, 7, 9, 12, 14, 18, 21, 24, 36, 42, 48}},
      {11, {5, 10, 20, 40, 55, 80, 100, 110, 120}},
      {13, {3, 4, 6, 12, 24, 39, 48, 52, 72, 78, 96, 144, 156, 168}},
      {37, {12, 36, 72, 444, 1296, 1332, 1368}},
  };
  auto it = table.find(q);
  if (it == table.end()) throw InputError("no degree table row for q = " + std::to_string(q));
  return it->second;
}

const std::vector<TorsionGroup>& tower_groups(long p) {
  static const std::vector<TorsionGroup> two = mazur_list();
  static const std::vector<TorsionGroup> three = [] {
    auto v = mazur_list();
    v.push_back({1, 21});
    v.push_back({1, 27});
    return v;
  }();
  if (p == 2) return two;
  if (p == 3) return three;
  throw InputError("tower_groups is defined for p = 2 and p = 3");
}

const std::set<long>& isogeny_prime_powers() {
  static const std::set<long> s = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 25, 27, 32, 37, 43, 67, 163};
  return s;
}

GrowthReport classify(const Curve& E, long p, const ClassifyOptions& opts) {
  return Classifier(E, p, opts).run();
}

bool replay(const Curve& E, const GrowthReport& report, int sample_size) {
  // the groups first: base recomputed, tower listed and containing base
  if (!(rational_torsion(E).group == report.base)) return false;
  const auto& listed = tower_groups(report.p);
  if (std::find(listed.begin(), listed.end(), report.tower) == listed.end()) return false;
  if (!is_subgroup(report.base, report.tower)) return false;
  std::map<long, long> witnessed;  // prime -> largest witnessed prime power order
  for (const Evidence& ev : report.evidence) {
    if (ev.mechanism != "division-factor-in-layer") continue;
    const long n = std::stol(ev.witness_value("n"));
    if (report.tower.n % n != 0) return false;
    for (long q = 2; q <= n; ++q) {
      if (n % q == 0) {
        witnessed[q] = std::max(witnessed[q], n);
        break;
      }
    }
  }
  for (long q = 2; q <= report.tower.order(); ++q) {
    if (report.tower.order() % q != 0 || !is_prime(static_cast<std::uint64_t>(q))) continue;
    const bool grows = report.tower.primary_part(q) > report.base.primary_part(q);
    if (grows && !witnessed.count(q)) return false;
    long cyc_tower = 1, cyc_base = 1;
    for (long n = report.tower.n; n % q == 0; n /= q) cyc_tower *= q;
    for (long n = report.base.n; n % q == 0; n /= q) cyc_base *= q;
    if (cyc_tower != std::max(cyc_base, witnessed.count(q) ? witnessed[q] : 1L)) return false;
  }

  DivisionPolynomials dp(E.short_model().A, E.short_model().B);
  for (const Evidence& ev : report.evidence) {
    if (ev.mechanism != "division-factor-in-layer") continue;
    const int n = std::stoi(ev.witness_value("n"));
    const int level = std::stoi(ev.witness_value("level"));
    IntPoly g = parse_coeff_list(ev.witness_value("x_coeffs"));
    const IntPoly& f = n == 2 ? dp.cubic() : dp.exact_order(n);
    if (!exact_quotient(primitive_part(f), primitive_part(g))) return false;
    auto layer_index = [&](int d) {
      int i = 0;
      long v = 1;
      while (v < d) {
        v *= report.p;
        ++i;
      }
      return v == d ? i : -1;
    };
    const int i = layer_index(g.degree());
    if (i < 0 || i > level) return false;
    if (layer_membership(g, LayerField{report.p, i}, sample_size).verdict != Membership::Yes) return false;
    if (n == 2) continue;  // y = 0
    IntPoly h = parse_coeff_list(ev.witness_value("y_coeffs"));
    IntPoly R = resultant_x(g, y_squared_minus(dp.cubic()));
    if (!exact_quotient(primitive_part(R), primitive_part(h))) return false;
    const int j = layer_index(h.degree());
    if (j < 0 || std::max(i, j) != level) return false;
    if (layer_membership(h, LayerField{report.p, j}, sample_size).verdict != Membership::Yes) return false;
  }
  return true;
}

}  // namespace ztower
