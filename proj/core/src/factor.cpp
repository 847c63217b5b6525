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

#include "ztower/factor.hpp"

#include <algorithm>
#include <functional>

#include "hensel.hpp"
#include "ztower/errors.hpp"
#include "ztower/mod_poly.hpp"

namespace ztower {
namespace {

constexpr std::uint64_t kFirstPrime = 13;
constexpr int kPrimesTried = 5;

struct PrimeData {
  std::uint64_t q;
  modp::PartialSplit split;
};

// Upper bound on |lc(f)| * |coefficients of monic g| for any g | f, deg g <= d.
Integer coefficient_bound(const IntPoly& f, int d) {
  const int n = f.degree();
  const Integer lc = abs(f.leading());
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), d, d / 2);
  Integer mignotte = binom * iroot_ceil(norm2, 2) * lc;

  // Fujiwara style bound R on root moduli; then e_i(roots) <= C(d,i) R^i.
  Integer R = 0;
  for (int i = 0; i < n; ++i) {
    if (f[i] == 0) continue;
    Integer ratio = abs(f[i]);
    mpz_cdiv_q(ratio.get_mpz_t(), ratio.get_mpz_t(), lc.get_mpz_t());
    R = std::max(R, iroot_ceil(ratio, n - i));
  }
  R *= 2;
  Integer root_bound = lc * ipow(R + 1, d);
  return std::min(mignotte, root_bound);
}

std::vector<PrimeData> good_primes(const IntPoly& f, int max_degree, int count) {
  std::vector<PrimeData> out;
  for (std::uint32_t q : small_primes()) {
    if (q < kFirstPrime) continue;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), q)) continue;
    modp::Poly fq = modp::reduce(f, q);
    if (!modp::is_squarefree(fq, q)) continue;
    out.push_back({q, modp::split_small_degrees(fq, max_degree, q)});
    if (static_cast<int>(out.size()) == count) break;
  }
  if (out.empty()) throw InternalError("no good prime found for a squarefree polynomial");
  return out;
}

// Sieve of degrees that can occur as degrees of factors of degree <= limit.
std::vector<bool> possible_degrees(const std::vector<PrimeData>& primes, int limit) {
  std::vector<bool> all(limit + 1, true);
  for (const auto& pd : primes) {
    std::vector<bool> sums(limit + 1, false);
    sums[0] = true;
    for (const auto& g : pd.split.small) {
      const int d = modp::degree(g);
      for (int s = limit; s >= d; --s) {
        if (sums[s - d]) sums[s] = true;
      }
    }
    for (int s = 0; s <= limit; ++s) all[s] = all[s] && sums[s];
  }
  return all;
}

IntPoly symmetric_mod(const IntPoly& f, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> c = f.coeffs();
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

IntPoly mul_mod_m(const IntPoly& a, const IntPoly& b, const Integer& m) {
  return symmetric_mod(a * b, m);
}

// Finds the irreducible factors of degree <= max_degree of a primitive,
// squarefree f with positive leading coefficient. When complete is set the
// cofactor left after recombination is also reported (it is irreducible).
std::vector<IntPoly> zassenhaus(const IntPoly& f_in, int max_degree, bool complete, const FactorOptions& opts) {
  std::vector<IntPoly> found;
  IntPoly f = f_in;
  const int n = f.degree();
  if (n < 1) return found;
  if (n == 1) {
    found.push_back(f);
    return found;
  }
  const int D = std::min(max_degree, n);
  auto primes = good_primes(f, D, complete ? 1 + (kPrimesTried - 1) : kPrimesTried);
  auto allowed = possible_degrees(primes, D);

  // Lifting prime: the first good prime for complete factorization,
  // otherwise the one with the fewest small factors.
  std::size_t pick = 0;
  if (!complete) {
    for (std::size_t i = 1; i < primes.size(); ++i) {
      if (primes[i].split.small.size() < primes[pick].split.small.size()) pick = i;
    }
  }
  const std::uint64_t q = primes[pick].q;
  const auto& split = primes[pick].split;
  const std::size_t r = split.small.size();

  bool any = false;
  for (int d = 1; d <= D; ++d) any = any || allowed[d];
  if (complete && !allowed[n]) throw InternalError("degree sieve rejected the whole polynomial");
  if (!any || r == 0) {
    if (complete) found.push_back(f);
    return found;
  }
  if (complete && r == 1) {
    found.push_back(f);
    return found;
  }

  const Integer bound = coefficient_bound(f, complete ? n : D);
  const Integer qz = static_cast<unsigned long>(q);
  unsigned k = 1;
  Integer M = qz;
  while (M <= 2 * bound) {
    M *= qz;
    ++k;
  }
  std::vector<modp::Poly> to_lift = split.small;
  if (modp::degree(split.rest) > 0) to_lift.push_back(split.rest);
  std::vector<IntPoly> lifted = detail::hensel_lift(f, to_lift, q, k);
  lifted.resize(r);

  std::vector<int> active(r);
  for (std::size_t i = 0; i < r; ++i) active[i] = static_cast<int>(i);
  std::uint64_t tried = 0;

  std::size_t size = 1;
  while (size <= active.size()) {
    if (complete && 2 * size > active.size()) break;
    bool restart = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      int deg = 0;
      for (auto i : idx) deg += modp::degree(split.small[active[i]]);
      if (deg <= D && deg <= f.degree() && allowed[deg]) {
        if (++tried > opts.max_subsets) {
          throw FactorizationLimit("Zassenhaus recombination exceeded " + std::to_string(opts.max_subsets) +
                                   " subsets");
        }
        IntPoly cand = IntPoly::constant(f.leading());
        for (auto i : idx) cand = mul_mod_m(cand, lifted[active[i]], M);
        bool plausible = true;
        if (f[0] != 0) {
          Integer lc0 = f.leading() * f[0];
          plausible = cand[0] != 0 && mpz_divisible_p(lc0.get_mpz_t(), cand[0].get_mpz_t());
        }
        if (plausible) {
          IntPoly g = primitive_part(cand);
          if (auto quo = exact_quotient(f, g)) {
            found.push_back(g);
            f = *quo;
            std::vector<int> keep;
            for (std::size_t j = 0; j < active.size(); ++j) {
              if (std::find(idx.begin(), idx.end(), j) == idx.end()) keep.push_back(active[j]);
            }
            active = std::move(keep);
            restart = true;
            break;
          }
        }
      }
      // Next combination.
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == active.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!restart) ++size;
  }
  if (complete && f.degree() >= 1) found.push_back(primitive_part(f));
  return found;
}

// Strips powers of x, returning the exponent.
unsigned strip_x(IntPoly& f) {
  unsigned k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  if (k) f = IntPoly(std::vector<Integer>(f.coeffs().begin() + k, f.coeffs().end()));
  return k;
}

bool squarefree_by_reduction(const IntPoly& f) {
  int tested = 0;
  for (std::uint32_t q : small_primes()) {
    if (q < kFirstPrime) continue;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), q)) continue;
    if (modp::is_squarefree(modp::reduce(f, q), q)) return true;
    if (++tested == 8) return false;
  }
  return false;
}

}  // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f_in) {
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly f = primitive_part(f_in);
  if (f.degree() < 1) return out;
  if (squarefree_by_reduction(f)) {
    out.emplace_back(f, 1);
    return out;
  }
  // s_i = product of factors with multiplicity >= i.
  IntPoly g = gcd(f, derivative(f));
  IntPoly s = divide_over_q(f, g);
  int i = 1;
  while (s.degree() >= 1) {
    IntPoly g2 = g.degree() >= 1 ? gcd(g, derivative(g)) : IntPoly::constant(1);
    IntPoly s2 = g.degree() >= 1 ? divide_over_q(g, g2) : IntPoly::constant(1);
    IntPoly part = divide_over_q(s, s2);
    if (part.degree() >= 1) out.emplace_back(part, i);
    s = s2;
    g = g2;
    ++i;
  }
  return out;
}

QFactorization factor_over_Q(const IntPoly& f, const FactorOptions& opts) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  QFactorization out;
  IntPoly g = f;
  unsigned xk = strip_x(g);
  if (xk) out.factors.emplace_back(IntPoly::x(), static_cast<int>(xk));
  for (auto& [part, mult] : squarefree_decomposition(g)) {
    for (auto& irr : zassenhaus(part, part.degree(), true, opts)) out.factors.emplace_back(irr, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  // unit = f / prod factors^e; compare leading coefficients.
  Integer lead = 1;
  for (auto& [p, e] : out.factors) lead *= ipow(p.leading(), e);
  out.unit = Rational(f.leading(), lead);
  out.unit.canonicalize();
  return out;
}

std::vector<IntPoly> small_degree_factors(const IntPoly& f, int max_degree, const FactorOptions& opts) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  std::vector<IntPoly> out;
  if (max_degree < 1) return out;
  IntPoly g = f;
  if (strip_x(g)) out.push_back(IntPoly::x());
  for (auto& [part, mult] : squarefree_decomposition(g)) {
    (void)mult;
    for (auto& irr : zassenhaus(part, max_degree, false, opts)) out.push_back(irr);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> rational_roots(const IntPoly& f) {
  std::vector<Rational> roots;
  for (const auto& lin : small_degree_factors(f, 1)) {
    Rational r(-lin[0], lin[1]);
    r.canonicalize();
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_Q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace ztower
