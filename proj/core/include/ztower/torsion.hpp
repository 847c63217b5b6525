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

#include <optional>
#include <string>
#include <vector>

#include "ztower/curve.hpp"

namespace ztower {

// Z/mZ + Z/nZ with m | n and m in {1, 2}; m = n = 1 is the trivial group.
struct TorsionGroup {
  long m = 1;
  long n = 1;

  long order() const { return m * n; }
  bool is_trivial() const { return n == 1; }
  // Size of the q-primary part for a prime q.
  long primary_part(long q) const;
  std::string str() const;  // "trivial", "Z/6Z", "Z/2Z x Z/8Z"
  static TorsionGroup parse(const std::string& s);  // inverse of str(); throws InputError
  friend bool operator==(const TorsionGroup&, const TorsionGroup&) = default;
};

bool is_subgroup(const TorsionGroup& sub, const TorsionGroup& super);
// Groups Z/N (N <= 10, 12) and Z/2 x Z/2N (N <= 4).
bool in_mazur_list(const TorsionGroup& g);
const std::vector<TorsionGroup>& mazur_list();

struct TorsionData {
  TorsionGroup group;
  std::vector<Point> generators;  // order m generator (if m = 2) first, then order n
};

TorsionData rational_torsion(const Curve& E);

// Bound on |E(Q)_tors|: gcd of #E(F_q) over the first eight odd primes of good reduction.
long torsion_order_bound(const Curve& E);

}  // namespace ztower
