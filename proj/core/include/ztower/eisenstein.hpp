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

#include <array>
#include <string>
#include <utility>

#include "ztower/arith.hpp"

namespace ztower {

// x + y*alpha in Z[alpha], alpha^2 + alpha + 1 = 0.
struct Eisenstein {
  Integer x = 0, y = 0;

  Integer norm() const { return x * x - x * y + y * y; }
  Eisenstein conj() const { return {x - y, -y}; }
  std::string str() const;

  friend Eisenstein operator+(const Eisenstein& a, const Eisenstein& b) { return {a.x + b.x, a.y + b.y}; }
  friend Eisenstein operator-(const Eisenstein& a, const Eisenstein& b) { return {a.x - b.x, a.y - b.y}; }
  friend Eisenstein operator*(const Eisenstein& a, const Eisenstein& b) {
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x - a.y * b.y};
  }
  friend bool operator==(const Eisenstein& a, const Eisenstein& b) { return a.x == b.x && a.y == b.y; }
};

// The six units +-1, +-alpha, +-alpha^2.
const std::array<Eisenstein, 6>& eisenstein_units();

// Quotient rounded to a nearest lattice point, and the remainder (norm below the divisor's).
std::pair<Eisenstein, Eisenstein> divmod(const Eisenstein& a, const Eisenstein& b);
Eisenstein gcd(Eisenstein a, Eisenstein b);

// pi with norm p, for a prime p = 1 mod 3.
Eisenstein split_prime(long p);

// pi^3 = a + 3b*alpha with gcd(a, b) = 1 and a^2 - 3ab + 9b^2 = p^3.
std::pair<Integer, Integer> cube_normalized(const Eisenstein& pi);

}  // namespace ztower
