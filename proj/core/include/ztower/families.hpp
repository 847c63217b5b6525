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

#include "ztower/curve.hpp"
#include "ztower/forms.hpp"
#include "ztower/torsion.hpp"

namespace ztower {

enum class Family {
  Z2xZ2_over3,  // trivial -> Z/2 x Z/2 over Q_{inf,3}
  Z3toZ2xZ6,    // Z/3 -> Z/2 x Z/6 over Q_{inf,3}
  TrivToZ7,     // trivial -> Z/7 over Q_{inf,3}
  Z3toZ9,       // Z/3 -> Z/9 over Q_{inf,3}
  Z2xZ2_over2,  // Z/2 -> Z/2 x Z/2 over Q_{inf,2}
  TwistBy2,     // twist by 2 of a curve with rational Z/N, growth over Q_{inf,2}
};

std::string to_string(Family f);             // CLI spelling, e.g. "triv-to-z7"
Family parse_family(const std::string& s);   // accepts CLI spelling or enum name
bool uses_split_prime(Family f);             // parameterised by p = 1 mod 3
long tower_prime(Family f);                  // 3 or 2

struct FamilyParams {
  Family family = Family::TrivToZ7;
  long p = 7;                // split prime for the p = 1 mod 3 families
  std::optional<int> k;      // form exponent; family default when unset
  Rational t = 2;            // parameter for Z2xZ2_over2 and TwistBy2
  int N = 7;                 // rational torsion order for TwistBy2
};

struct FamilyCurve {
  Family family;
  long p = 0;                          // split prime, 0 when not used
  std::optional<FormSolution> form;
  Rational parameter;                  // h or t
  Integer twist = 1;                   // quadratic twist applied to the family model
  Curve curve;
  Rational family_j;                   // j from the family formula at the parameter
  TorsionGroup expected_base, expected_tower;
  long tower_p = 3;
};

// Raised when no suitable quadratic twist can be determined.
class TwistSelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FamilyCurve gen_curve(const FamilyParams& params);

// Tate normal form with (0,0) of order N, N in {3,...,10, 12}.
Curve tate_normal_form(int N, const Rational& t);

}  // namespace ztower
