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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ztower/curve.hpp"
#include "ztower/torsion.hpp"
#include "ztower/tower.hpp"

namespace ztower {

// One step of the case analysis: what was concluded, by which rule, and
// the data needed to re-check it.
struct Evidence {
  std::string claim;
  std::string mechanism;  // stable tag, see mechanisms() below
  std::string citation;   // the rule in words
  std::vector<std::pair<std::string, std::string>> witness;

  std::string witness_value(const std::string& key) const;
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

enum class Verdict { Resolved, Unresolved };
std::string to_string(Verdict v);

struct GrowthReport {
  long p = 2;
  TorsionGroup base;
  TorsionGroup tower;
  std::vector<Evidence> evidence;
  std::optional<int> layer_of_growth;  // set when tower != base
  Verdict verdict = Verdict::Resolved;
  friend bool operator==(const GrowthReport&, const GrowthReport&) = default;
};

struct ClassifyOptions {
  int sample_size = 50;
};

// E(Q_{inf,p})_tors with the supporting evidence. p must be prime.
GrowthReport classify(const Curve& E, long p, const ClassifyOptions& opts = {});

// Re-runs every explicit computation recorded in the report (factor
// divisibility, layer membership, y-test); true when all of them agree.
bool replay(const Curve& E, const GrowthReport& report, int sample_size = 50);

// Degrees [Q(P):Q] that occur for points P of prime order q on curves over Q;
// q in {2, 3, 5, 7, 11, 13, 37}.
const std::set<long>& admissible_degrees(long q);

// Groups that can occur as E(Q_{inf,p})_tors for p = 2 or p = 3.
const std::vector<TorsionGroup>& tower_groups(long p);

// Orders q^k of cyclic prime-power torsion allowed by isogeny degree bounds.
const std::set<long>& isogeny_prime_powers();

// Tag -> citation for every mechanism the classifier can emit.
const std::vector<std::pair<std::string, std::string>>& mechanisms();

// j-invariant of the curves with a rational 27-isogeny: -2^15 * 3 * 5^3.
Rational j_27_isogeny();

}  // namespace ztower
