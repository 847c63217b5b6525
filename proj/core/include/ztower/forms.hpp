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

#include <string>
#include <vector>

#include "ztower/arith.hpp"

namespace ztower {

enum class FormId {
  U27,     // u^2 + 27 v^2
  DISC27,  // u^2 + u v + 7 v^2
  F3,      // u^2 + 3 u v + 9 v^2
  F13,     // u^2 + 13 u v + 49 v^2
};

std::string to_string(FormId f);
FormId parse_form(const std::string& s);

Integer evaluate_form(FormId f, const Integer& u, const Integer& v);

// Right-hand side the form must represent: 4*3^k*p^3 for U27, 3^k*p^3 otherwise.
Integer form_target(FormId f, int k, long p);

struct FormSolution {
  FormId form = FormId::U27;
  int k = 3;
  Integer u, v, target;
};

// A primitive representation built from pi^3 for pi above p; p = 1 mod 3.
// Valid k: U27 {2, 3}, F13 {2, 3}, F3 {3}, DISC27 {3}.
FormSolution solve_form(FormId f, int k, long p);

// Every distinct primitive solution reached from the pi^3 construction, in a
// fixed order; solve_form returns the first.
std::vector<FormSolution> form_solutions(FormId f, int k, long p);

}  // namespace ztower
