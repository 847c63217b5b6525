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
#include <vector>

#include "ztower/int_poly.hpp"
#include "ztower/mod_poly.hpp"

namespace ztower::detail {

// Lifts monic, pairwise coprime factors of f mod p (whose product is
// f / lc(f) mod p) to monic factors mod p^k, coefficients in [0, p^k).
std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<modp::Poly>& factors,
                                 std::uint64_t p, unsigned k);

}  // namespace ztower::detail
