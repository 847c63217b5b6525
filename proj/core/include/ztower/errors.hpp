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

#include <stdexcept>
#include <string>

namespace ztower {

// Raised for malformed user input: bad coefficients, unknown labels, etc.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularCurve : public InputError {
 public:
  SingularCurve() : InputError("curve is singular (discriminant 0)") {}
};

class NotPrime : public InputError {
 public:
  explicit NotPrime(const std::string& what) : InputError(what + " is not prime") {}
};

class BadReduction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by the zero polynomial") {}
};

class ReducibleInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegreeMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Recombination in Zassenhaus exceeded its subset budget.
class FactorizationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Missing or unreadable fixture and report files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven invariant failed. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ztower
