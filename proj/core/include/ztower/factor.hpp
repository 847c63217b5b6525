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

namespace ztower {

struct FactorOptions {
  std::uint64_t max_subsets = 1u << 20;  // recombination budget
};

// f = unit * prod factor_i^e_i with factors primitive, positive leading
// coefficient, irreducible over Q, and sorted by canonical_less.
struct QFactorization {
  Rational unit;
  std::vector<std::pair<IntPoly, int>> factors;
};

QFactorization factor_over_Q(const IntPoly& f, const FactorOptions& opts = {});

// Primitive squarefree parts: f = c * prod part_i^mult_i.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// Distinct irreducible factors of f over Q having degree <= max_degree,
// canonically ordered. Much cheaper than a full factorization when
// max_degree is small compared to deg f.
std::vector<IntPoly> small_degree_factors(const IntPoly& f, int max_degree, const FactorOptions& opts = {});

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

}  // namespace ztower
