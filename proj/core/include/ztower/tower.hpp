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

#include "ztower/arith.hpp"
#include "ztower/int_poly.hpp"

namespace ztower {

// The m-th layer Q_{m,p} of the cyclotomic Z_p-extension of Q.
struct LayerField {
  long p = 2;
  int m = 0;

  Integer degree() const;     // p^m
  Integer conductor() const;  // p^(m+1) for odd p, 2^(m+2) for p = 2
  std::string str() const;    // "Q_{m,p}"
  friend bool operator==(const LayerField&, const LayerField&) = default;
};

// Whether the prime q != p splits completely in L.
bool splits_in_layer(std::uint64_t q, const LayerField& L);

// Defining polynomial of a generator of L (p = 2: 2cos(2 pi / 2^(m+2)),
// p = 3: 2cos(2 pi / 3^(m+1))). Only p in {2, 3}.
IntPoly layer_polynomial(const LayerField& L);

// x^3 + A x + B with (A, B) divided by R^2, R^3 for every R with R^2 | A and R^3 | B.
std::pair<Integer, Integer> reduce_cubic(const Integer& A, const Integer& B);

// Conductor of the cubic field of an irreducible x^3 + A x + B when it is
// cyclic (discriminant a square); nullopt when not cyclic. Throws
// ReducibleInput when the cubic has a rational root.
std::optional<Integer> cubic_conductor(const Integer& A, const Integer& B);

// Whether the irreducible cubic f defines Q_{1,3} (cyclic of conductor 9).
bool is_layer_cubic(const IntPoly& f);

enum class Membership { Yes, No, Inconclusive };
std::string to_string(Membership m);

struct LayerTest {
  Membership verdict = Membership::Inconclusive;
  std::optional<std::uint64_t> witness;  // a prime contradicting membership
  int primes_sampled = 0;
  std::string method;  // "rational", "quadratic-discriminant", "cubic-conductor", "frobenius-sampling"
};

// Frobenius sampling: for unramified q, f splits completely mod q iff q
// splits in the field of f; if Q(f) = L the two splitting sets agree.
// Requires deg f = [L : Q] and f irreducible.
LayerTest defines_layer(const IntPoly& f, const LayerField& L, int sample_size = 50);

// Exact tests where available (degree 1, Q(sqrt 2), cyclic cubic), else sampling.
LayerTest layer_membership(const IntPoly& f, const LayerField& L, int sample_size = 50);

}  // namespace ztower
