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

#include "ztower/forms.hpp"

#include <optional>
#include <vector>

#include "ztower/eisenstein.hpp"
#include "ztower/errors.hpp"

namespace ztower {

std::string to_string(FormId f) {
  switch (f) {
    case FormId::U27: return "U27";
    case FormId::DISC27: return "DISC27";
    case FormId::F3: return "F3";
    case FormId::F13: return "F13";
  }
  return "?";
}

FormId parse_form(const std::string& s) {
  for (FormId f : {FormId::U27, FormId::DISC27, FormId::F3, FormId::F13}) {
    if (to_string(f) == s) return f;
  }
  throw InputError("unknown form '" + s + "'");
}

Integer evaluate_form(FormId f, const Integer& u, const Integer& v) {
  switch (f) {
    case FormId::U27: return u * u + 27 * v * v;
    case FormId::DISC27: return u * u + u * v + 7 * v * v;
    case FormId::F3: return u * u + 3 * u * v + 9 * v * v;
    case FormId::F13: return u * u + 13 * u * v + 49 * v * v;
  }
  return 0;
}

Integer form_target(FormId f, int k, long p) {
  Integer pp = p;
  Integer t = ipow(Integer(3), k) * pp * pp * pp;
  return f == FormId::U27 ? 4 * t : t;
}

namespace {

// Element whose norm times p^3 is the target.
Eisenstein multiplier(FormId f, int k) {
  switch (f) {
    case FormId::U27:
      if (k == 2) return {6, 6};   // norm 36
      if (k == 3) return {12, 6};  // norm 108
      break;
    case FormId::F13:
      if (k == 2) return {3, 0};  // norm 9
      if (k == 3) return {3, 6};  // norm 27
      break;
    case FormId::F3:
    case FormId::DISC27:
      if (k == 3) return {3, 6};
      break;
  }
  throw InputError("k = " + std::to_string(k) + " is not supported for form " + to_string(f));
}

// Coordinates of the form attached to the norm form x^2 - xy + y^2 at z = x + y*alpha.
std::optional<std::pair<Integer, Integer>> to_form(FormId f, const Eisenstein& z) {
  const Integer& X = z.x;
  const Integer& Y = z.y;
  switch (f) {
    case FormId::U27:
      if (Y % 6 != 0) return std::nullopt;
      return std::make_pair(Integer(X - Y / 2), Integer(Y / 6));
    case FormId::F3:
      if (Y % 3 != 0) return std::nullopt;
      return std::make_pair(X, Integer(-Y / 3));
    case FormId::DISC27: {
      if (Y % 3 != 0) return std::nullopt;
      Integer t = Y / 3;
      return std::make_pair(Integer(X - 2 * t), t);
    }
    case FormId::F13: {
      if (Y % 3 != 0) return std::nullopt;
      Integer s = X, t = -Y / 3;
      return std::make_pair(Integer(s - 5 * t), t);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<FormSolution> form_solutions(FormId f, int k, long p) {
  const Eisenstein m = multiplier(f, k);
  const Eisenstein pi = split_prime(p);
  const Integer target = form_target(f, k, p);
  const Eisenstein cubes[2] = {pi * pi * pi, pi.conj() * pi.conj() * pi.conj()};
  const Eisenstein mults[2] = {m, m.conj()};
  std::vector<FormSolution> out;
  for (const auto& c : mults) {
    for (const auto& rho3 : cubes) {
      for (const auto& eps : eisenstein_units()) {
        auto uv = to_form(f, c * eps * rho3);
        if (!uv) continue;
        const auto& [u, v] = *uv;
        if (evaluate_form(f, u, v) != target) throw InternalError("solve_form: norm identity failed");
        if (gcd(u, v) != 1) continue;
        bool seen = false;
        for (const auto& s : out) seen = seen || (s.u == u && s.v == v);
        if (!seen) out.push_back({f, k, u, v, target});
      }
    }
  }
  return out;
}

FormSolution solve_form(FormId f, int k, long p) {
  auto all = form_solutions(f, k, p);
  if (all.empty()) {
    throw InternalError("solve_form: no primitive solution for " + to_string(f) + " p=" + std::to_string(p));
  }
  return all.front();
}

}  // namespace ztower
