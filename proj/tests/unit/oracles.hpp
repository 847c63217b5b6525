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

// Slow, obviously-correct reference computations for the tests.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ztower/arith.hpp"
#include "ztower/int_poly.hpp"

namespace oracle {

using ztower::Integer;
using ztower::IntPoly;
using ztower::Rational;

// Determinant by Gaussian elimination over Q.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational k = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= k * m[c][j];
    }
  }
  return det;
}

// Res(f, g) as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int N = m + n;
  std::vector<std::vector<Rational>> S(N, std::vector<Rational>(N, 0));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) S[r][r + i] = f.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) S[n + r][r + i] = g.coeff(n - i);
  }
  Rational d = determinant(S);
  return d.get_num();
}

inline std::uint64_t mod(const Integer& a, std::uint64_t q) {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(a.get_mpz_t(), q));
}

inline std::uint64_t eval_mod(const IntPoly& f, std::uint64_t x, std::uint64_t q) {
  std::uint64_t acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = (acc * x + mod(f[i], q)) % q;
  return acc;
}

// Number of roots of f in F_q by trying every element.
inline int count_roots_mod(const IntPoly& f, std::uint64_t q) {
  int n = 0;
  for (std::uint64_t x = 0; x < q; ++x) n += eval_mod(f, x, q) == 0;
  return n;
}

// Points on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q, counted by brute force.
inline std::uint64_t brute_count(const std::array<Integer, 5>& a, std::uint64_t q) {
  std::uint64_t a1 = mod(a[0], q), a2 = mod(a[1], q), a3 = mod(a[2], q), a4 = mod(a[3], q), a6 = mod(a[4], q);
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      std::uint64_t lhs = (y * y + a1 * x % q * y + a3 * y) % q;
      std::uint64_t rhs = (((x + a2) % q * x + a4) % q * x + a6) % q;
      n += lhs == rhs;
    }
  }
  return n;
}

// Affine arithmetic on Y^2 = X^3 + A X + B over F_q; nullopt is the point at infinity.
struct ShortModQ {
  std::uint64_t A, B, q;
  using Pt = std::optional<std::pair<std::uint64_t, std::uint64_t>>;

  std::uint64_t inv(std::uint64_t a) const { return ztower::pow_mod(a, q - 2, q); }

  Pt add(const Pt& P, const Pt& Q) const {
    if (!P) return Q;
    if (!Q) return P;
    auto [x1, y1] = *P;
    auto [x2, y2] = *Q;
    std::uint64_t lam;
    if (x1 == x2) {
      if ((y1 + y2) % q == 0) return std::nullopt;
      lam = (3 * x1 % q * x1 + A) % q * inv(2 * y1 % q) % q;
    } else {
      lam = (y2 + q - y1) % q * inv((x2 + q - x1) % q) % q;
    }
    std::uint64_t x3 = (lam * lam % q + 2 * q - x1 - x2) % q;
    std::uint64_t y3 = (lam * ((x1 + q - x3) % q) % q + q - y1) % q;
    return std::make_pair(x3, y3);
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> points() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t x = 0; x < q; ++x) {
      std::uint64_t r = ((x * x % q + A) % q * x + B) % q;
      for (std::uint64_t y = 0; y < q; ++y) {
        if (y * y % q == r) out.emplace_back(x, y);
      }
    }
    return out;
  }

  // Order of P by repeated addition.
  long order(const Pt& P) const {
    long n = 1;
    Pt R = P;
    while (R) {
      R = add(R, P);
      ++n;
    }
    return n;
  }
};

// Polynomial with the given real roots, coefficients rounded to integers.
inline IntPoly from_real_roots(const std::vector<long double>& roots) {
  std::vector<long double> c{1.0L};
  for (long double r : roots) {
    std::vector<long double> next(c.size() + 1, 0.0L);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  std::vector<Integer> out;
  for (long double x : c) out.emplace_back(static_cast<long>(std::llround(x)));
  return IntPoly(out);
}

// Minimal polynomial of 2cos(2 pi / n).
inline IntPoly cos_minpoly(long n) {
  std::vector<long double> roots;
  for (long k = 1; 2 * k < n; ++k) {
    if (std::gcd(k, n) == 1) roots.push_back(2 * std::cos(2 * M_PIl * k / n));
  }
  return from_real_roots(roots);
}

// Periods sum_{k in coset} 2cos(2 pi k / n) for the cosets of a subgroup H of
// (Z/n)^* containing -1; H is given as a membership predicate on residues.
template <class InH>
inline IntPoly period_polynomial(long n, InH in_h) {
  std::vector<long> reps;
  std::vector<bool> used(n, false);
  std::vector<long double> roots;
  for (long a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1 || used[a]) continue;
    long double eta = 0;
    for (long h = 1; h < n; ++h) {
      if (std::gcd(h, n) != 1 || !in_h(h)) continue;
      long k = a * h % n;
      used[k] = true;
      eta += std::cos(2 * M_PIl * k / n);
    }
    roots.push_back(eta);
  }
  return from_real_roots(roots);
}

inline IntPoly random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = d(rng);
  while (c.back() == 0) c.back() = d(rng);
  return IntPoly(c);
}

}  // namespace oracle
