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

#include "ztower/eisenstein.hpp"

#include "ztower/errors.hpp"

namespace ztower {

std::string Eisenstein::str() const {
  std::string s = x.get_str();
  s += y < 0 ? " - " : " + ";
  s += Integer(abs(y)).get_str() + "*alpha";
  return s;
}

const std::array<Eisenstein, 6>& eisenstein_units() {
  static const std::array<Eisenstein, 6> u = {
      Eisenstein{1, 0}, Eisenstein{-1, 0}, Eisenstein{0, 1}, Eisenstein{0, -1}, Eisenstein{-1, -1}, Eisenstein{1, 1}};
  return u;
}

namespace {

Integer round_div(const Integer& a, const Integer& b) {
  // nearest integer to a/b for b > 0
  Integer q;
  Integer twice = 2 * a + b;
  Integer den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

std::pair<Eisenstein, Eisenstein> divmod(const Eisenstein& a, const Eisenstein& b) {
  const Integer n = b.norm();
  if (n == 0) throw InputError("Eisenstein division by zero");
  Eisenstein num = a * b.conj();
  Eisenstein q{round_div(num.x, n), round_div(num.y, n)};
  // Coordinate-wise rounding can miss the nearest point; check neighbours.
  Eisenstein best = q, best_r = a - b * q;
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      Eisenstein c{q.x + dx, q.y + dy};
      Eisenstein r = a - b * c;
      if (r.norm() < best_r.norm()) {
        best = c;
        best_r = r;
      }
    }
  }
  return {best, best_r};
}

Eisenstein gcd(Eisenstein a, Eisenstein b) {
  while (!(b == Eisenstein{})) {
    Eisenstein r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a;
}

Eisenstein split_prime(long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw NotPrime(std::to_string(p));
  if (p % 3 != 1) throw InputError(std::to_string(p) + " is not 1 mod 3");
  const std::uint64_t up = static_cast<std::uint64_t>(p);
  auto r = sqrt_mod(up - 3, up);
  if (!r) throw InternalError("-3 is not a square mod p = 1 mod 3");
  // alpha = (-1 + sqrt(-3)) / 2 mod p
  std::uint64_t s = mul_mod((*r + up - 1) % up, inv_mod(2, up), up);
  Eisenstein g = gcd(Eisenstein{Integer(p), 0}, Eisenstein{-Integer(static_cast<unsigned long>(s)), 1});
  if (g.norm() != p) throw InternalError("split_prime: gcd has wrong norm");
  return g;
}

std::pair<Integer, Integer> cube_normalized(const Eisenstein& pi) {
  Eisenstein c = pi * pi * pi;
  if (c.y % 3 != 0) throw InternalError("cube_normalized: alpha coefficient not divisible by 3");
  Integer a = c.x, b = c.y / 3;
  if (gcd(a, b) != 1) throw InternalError("cube_normalized: gcd(a, b) != 1");
  const Integer n = pi.norm();
  if (a * a - 3 * a * b + 9 * b * b != n * n * n) throw InternalError("cube_normalized: norm mismatch");
  return {a, b};
}

}  // namespace ztower
