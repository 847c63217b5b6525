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

#include "ztower/arith.hpp"

#include <algorithm>
#include <map>

#include "ztower/errors.hpp"

namespace ztower {

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, unsigned long exp) {
  Rational r(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  r.canonicalize();
  return r;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto n = exact_sqrt(q.get_num());
  if (!n) return std::nullopt;
  auto d = exact_sqrt(q.get_den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

bool is_square(const Rational& q) { return rational_sqrt(q).has_value(); }

Integer iroot_floor(const Integer& n, unsigned long k) {
  if (n < 0) throw InputError("iroot_floor of a negative number");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Integer iroot_ceil(const Integer& n, unsigned long k) {
  Integer r = iroot_floor(n, k);
  if (ipow(r, k) < n) ++r;
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  return pow_mod(a % m, m - 2, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const Integer& n) {
  if (n.fits_ulong_p()) return is_prime(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 1u << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

unsigned valuation(Integer n, const Integer& p) {
  if (n == 0) throw InputError("valuation of zero");
  return static_cast<unsigned>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

namespace {

// Pollard rho, Brent's variant; returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n, unsigned long seed, unsigned long max_iter) {
  Integer y = seed % n, c = (seed * 7 + 1) % n, g = 1, q = 1, x, ys;
  unsigned long r = 1, iters = 0;
  const unsigned long m = 128;
  auto f = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        f(y);
        q *= abs(x - y);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
    iters += r;
    if (iters > max_iter) return 0;
  }
  if (g == n) {
    do {
      f(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out, Integer& cofactor) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (auto r = exact_sqrt(n)) {
    split_into(*r, out, cofactor);
    split_into(*r, out, cofactor);
    return;
  }
  for (unsigned long seed = 2; seed < 12; ++seed) {
    Integer d = pollard_brent(n, seed, 1ul << 22);
    if (d != 0 && d != 1) {
      split_into(d, out, cofactor);
      split_into(n / d, out, cofactor);
      return;
    }
  }
  cofactor *= n;
}

}  // namespace

Factored factor_integer(const Integer& n_in) {
  if (n_in == 0) throw InputError("factor_integer of zero");
  Integer n = abs(n_in);
  std::map<Integer, unsigned> found;
  for (std::uint32_t p : small_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      Integer pp = p;
      found[pp] = static_cast<unsigned>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
    }
    if (n == 1) break;
  }
  Factored out;
  if (n != 1) split_into(n, found, out.cofactor);
  for (auto& [p, e] : found) out.primes.emplace_back(p, e);
  return out;
}

std::optional<Integer> squarefree_part(const Rational& q) {
  if (q == 0) throw InputError("squarefree part of zero");
  Integer d = sgn(q);
  for (const Integer* part : {&q.get_num(), &q.get_den()}) {
    Factored f = factor_integer(*part);
    if (!f.complete()) return std::nullopt;
    for (auto& [p, e] : f.primes) {
      if (e % 2) d *= p;
    }
  }
  return d;
}

Integer rational_to_integer(const Rational& q) {
  if (q.get_den() != 1) throw InputError("expected an integer, got " + q.get_str());
  return q.get_num();
}

}  // namespace ztower
