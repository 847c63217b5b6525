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

#include "ztower/mod_poly.hpp"

#include <algorithm>
#include <random>

#include "ztower/errors.hpp"

namespace ztower::modp {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly reduce(const IntPoly& f, std::uint64_t q) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), q);
  }
  trim(out);
  return out;
}

IntPoly lift_symmetric(const Poly& f, std::uint64_t q) {
  std::vector<Integer> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    c[i] = static_cast<unsigned long>(f[i]);
    if (f[i] > q / 2) c[i] -= static_cast<unsigned long>(q);
  }
  return IntPoly(std::move(c));
}

Poly add(const Poly& a, const Poly& b, std::uint64_t q) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % q;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t q) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + q - y) % q;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % q);
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::uint64_t k, std::uint64_t q) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], k, q);
  trim(r);
  return r;
}

Poly monic(const Poly& a, std::uint64_t q) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), q), q);
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t q) {
  if (b.empty()) throw DivisionByZero();
  if (a.size() < b.size()) return {Poly{}, a};
  Poly r = a;
  const std::size_t db = b.size() - 1;
  Poly quo(a.size() - db, 0);
  const std::uint64_t inv = inv_mod(b.back(), q);
  for (std::size_t k = quo.size(); k-- > 0;) {
    std::uint64_t t = mul_mod(r[k + db], inv, q);
    quo[k] = t;
    if (!t) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k + j] = (r[k + j] + q - mul_mod(t, b[j], q)) % q;
    }
  }
  r.resize(db);
  trim(r);
  trim(quo);
  return {quo, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t q) {
  if (b.empty()) throw DivisionByZero();
  if (a.size() < b.size()) return a;
  Poly r = a;
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv = inv_mod(b.back(), q);
  for (std::size_t k = a.size() - db; k-- > 0;) {
    std::uint64_t t = mul_mod(r[k + db], inv, q);
    if (!t) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k + j] = (r[k + j] + q - mul_mod(t, b[j], q)) % q;
    }
  }
  r.resize(db);
  trim(r);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t q) {
  while (!b.empty()) {
    Poly r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, q);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b, std::uint64_t q) {
  Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [quo, r] = divrem(r0, r1, q);
    Poly s = sub(s0, mul(quo, s1, q), q);
    Poly t = sub(t0, mul(quo, t1, q), q);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.empty()) return {r0, s0, t0};
  std::uint64_t inv = inv_mod(r0.back(), q);
  return {scale(r0, inv, q), scale(s0, inv, q), scale(t0, inv, q)};
}

Poly derivative(const Poly& f, std::uint64_t q) {
  if (f.size() < 2) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul_mod(f[i], i % q, q);
  trim(d);
  return d;
}

Poly powmod(const Poly& base, const Integer& exp, const Poly& mod, std::uint64_t q) {
  Poly result = {1};
  result = rem(result, mod, q);
  Poly b = rem(base, mod, q);
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, q), mod, q);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = rem(mul(result, b, q), mod, q);
  }
  return result;
}

bool is_squarefree(const Poly& f, std::uint64_t q) {
  if (degree(f) < 1) return true;
  Poly d = derivative(f, q);
  if (d.empty()) return false;
  return degree(gcd(f, d, q)) == 0;
}

namespace {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

// f(x) = g(x^q); returns g (coefficients are fixed by Frobenius on F_q).
Poly pth_root(const Poly& f, std::uint64_t q) {
  Poly r((f.size() - 1) / q + 1, 0);
  for (std::size_t i = 0; i < f.size(); i += q) r[i / q] = f[i];
  trim(r);
  return r;
}

// Yun's algorithm adapted to characteristic q; f monic.
void squarefree_parts(const Poly& f, std::uint64_t q, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (degree(f) < 1) return;
  Poly d = derivative(f, q);
  Poly c = d.empty() ? f : gcd(f, d, q);
  Poly w = divrem(f, c, q).first;
  int i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c, q);
    Poly z = divrem(w, y, q).first;
    if (degree(z) > 0) out.emplace_back(monic(z, q), i * mult);
    ++i;
    w = std::move(y);
    c = divrem(c, w, q).first;
  }
  if (degree(c) > 0) squarefree_parts(monic(pth_root(c, q), q), q, mult * static_cast<int>(q), out);
}

Poly x_poly() { return Poly{0, 1}; }

// Splits a product of distinct monic irreducibles of degree d (Cantor-Zassenhaus).
void equal_degree(const Poly& f, int d, std::uint64_t q, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer exp;
  if (q != 2) {
    exp = (ipow(Integer(static_cast<unsigned long>(q)), d) - 1) / 2;
  }
  std::uniform_int_distribution<std::uint64_t> coef(0, q - 1);
  while (true) {
    Poly a(n);
    for (auto& v : a) v = coef(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(f, a, q);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, q, rng, out);
      equal_degree(divrem(f, g, q).first, d, q, rng, out);
      return;
    }
    Poly b;
    if (q == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      Poly t = rem(a, f, q);
      b = t;
      for (int i = 1; i < d; ++i) {
        t = rem(mul(t, t, q), f, q);
        b = add(b, t, q);
      }
    } else {
      b = sub(powmod(a, exp, f, q), Poly{1}, q);
    }
    g = gcd(f, b, q);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, q, rng, out);
      equal_degree(divrem(f, g, q).first, d, q, rng, out);
      return;
    }
  }
}

// Distinct-degree factorization of monic squarefree f, stopping after max_degree.
// Returns (product, degree) pairs plus whatever is left.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f, int max_degree, std::uint64_t q, Poly& rest) {
  std::vector<std::pair<Poly, int>> out;
  Poly h = x_poly();
  const Integer qz = static_cast<unsigned long>(q);
  for (int d = 1; d <= max_degree && degree(f) >= 2 * d; ++d) {
    h = powmod(h, qz, f, q);
    Poly g = gcd(f, sub(h, x_poly(), q), q);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divrem(f, g, q).first;
      h = rem(h, f, q);
    }
  }
  if (degree(f) > 0 && degree(f) <= max_degree) {
    // Nothing of degree below half remains, so f is irreducible.
    out.emplace_back(f, degree(f));
    f = {1};
  }
  rest = f;
  return out;
}

}  // namespace

PartialSplit split_small_degrees(const Poly& f_in, int max_degree, std::uint64_t q) {
  Poly f = monic(f_in, q);
  PartialSplit out;
  std::mt19937_64 rng(0x5eedull ^ (q * 1000003ull) ^ static_cast<std::uint64_t>(degree(f)));
  for (auto& [prod, d] : distinct_degree(f, max_degree, q, out.rest)) {
    equal_degree(prod, d, q, rng, out.small);
  }
  std::sort(out.small.begin(), out.small.end(), poly_less);
  return out;
}

Factorization factor(const Poly& f_in, std::uint64_t q) {
  Poly f = f_in;
  trim(f);
  if (f.empty()) throw InputError("factor of the zero polynomial mod q");
  Factorization out;
  out.unit = f.back();
  f = monic(f, q);
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_parts(f, q, 1, sqf);
  std::mt19937_64 rng(0x5eedull ^ (q * 1000003ull) ^ static_cast<std::uint64_t>(degree(f)));
  for (auto& [part, mult] : sqf) {
    Poly rest;
    for (auto& [prod, d] : distinct_degree(part, degree(part), q, rest)) {
      std::vector<Poly> pieces;
      equal_degree(prod, d, q, rng, pieces);
      for (auto& p : pieces) out.factors.push_back({std::move(p), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly != b.poly) return poly_less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace ztower::modp

namespace ztower {

modp::Factorization factor_mod_p(const IntPoly& f, std::uint64_t q) {
  if (!is_prime(q)) throw NotPrime(std::to_string(q));
  if (q >= (1ull << 32)) throw InputError("modulus must be below 2^32");
  modp::Poly r = modp::reduce(f, q);
  if (r.empty()) throw InputError("polynomial vanishes mod " + std::to_string(q));
  return modp::factor(r, q);
}

}  // namespace ztower
