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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ztower {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, unsigned long exp);

std::optional<Integer> exact_sqrt(const Integer& n);
std::optional<Rational> rational_sqrt(const Rational& q);
bool is_square(const Rational& q);

// Largest r >= 0 with r^k <= n, n >= 0.
Integer iroot_floor(const Integer& n, unsigned long k);
Integer iroot_ceil(const Integer& n, unsigned long k);

bool is_prime(std::uint64_t n);
bool is_probable_prime(const Integer& n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime >= n
const std::vector<std::uint32_t>& small_primes();  // all primes below 2^16

unsigned valuation(Integer n, const Integer& p);  // n != 0

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);  // m prime, a != 0 mod m

// Square root of a modulo an odd prime p (Tonelli-Shanks); nullopt for non-residues.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

struct Factored {
  std::vector<std::pair<Integer, unsigned>> primes;  // ascending
  Integer cofactor = 1;  // unfactored part, 1 when complete
  bool complete() const { return cofactor == 1; }
};

// Trial division then Pollard-Brent on what remains (effort-bounded).
Factored factor_integer(const Integer& n);

// Signed squarefree part of a nonzero rational modulo squares, if the
// numerator and denominator factor completely.
std::optional<Integer> squarefree_part(const Rational& q);

Integer rational_to_integer(const Rational& q);  // throws if q is not integral

}  // namespace ztower
