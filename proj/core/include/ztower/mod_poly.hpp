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
#include <utility>
#include <vector>

#include "ztower/arith.hpp"
#include "ztower/int_poly.hpp"

namespace ztower::modp {

// Polynomial over F_q (q prime, q < 2^32), low degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly reduce(const IntPoly& f, std::uint64_t q);
IntPoly lift_symmetric(const Poly& f, std::uint64_t q);  // coefficients in (-q/2, q/2]

void trim(Poly& f);
Poly add(const Poly& a, const Poly& b, std::uint64_t q);
Poly sub(const Poly& a, const Poly& b, std::uint64_t q);
Poly mul(const Poly& a, const Poly& b, std::uint64_t q);
Poly scale(const Poly& a, std::uint64_t k, std::uint64_t q);
Poly monic(const Poly& a, std::uint64_t q);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t q);
Poly rem(const Poly& a, const Poly& b, std::uint64_t q);
Poly gcd(Poly a, Poly b, std::uint64_t q);  // monic
// s*a + t*b = gcd (monic); returns {gcd, s, t}.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b, std::uint64_t q);
Poly derivative(const Poly& f, std::uint64_t q);
Poly powmod(const Poly& base, const Integer& exp, const Poly& mod, std::uint64_t q);

bool is_squarefree(const Poly& f, std::uint64_t q);

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity = 1;
};

// Complete factorization; the unit is lc(f) mod q.
struct Factorization {
  std::uint64_t unit = 0;
  std::vector<Factor> factors;  // sorted by (degree, coefficients)
};
Factorization factor(const Poly& f, std::uint64_t q);

// Monic squarefree f: irreducible factors of degree <= max_degree, and the
// product of all remaining factors (monic, possibly 1).
struct PartialSplit {
  std::vector<Poly> small;
  Poly rest;
};
PartialSplit split_small_degrees(const Poly& f, int max_degree, std::uint64_t q);

}  // namespace ztower::modp

namespace ztower {

// Factorization of f mod q; q must be prime and f nonzero mod q.
modp::Factorization factor_mod_p(const IntPoly& f, std::uint64_t q);

}  // namespace ztower
