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
#include <optional>
#include <string>
#include <vector>

#include "ztower/classifier.hpp"
#include "ztower/families.hpp"
#include "ztower/torsion.hpp"

// JSON documents for the CLI. Serialization is canonical, so
// serialize(parse(s)) == s for anything this module wrote.
namespace ztower {

inline constexpr int kSchemaVersion = 1;

struct CurveRecord {
  std::string label;
  std::array<Integer, 5> a_invariants;
  TorsionGroup expected_base;
  std::optional<TorsionGroup> expected_tower_p2;
  std::optional<TorsionGroup> expected_tower_p3;
  std::string provenance;

  Curve curve() const;
  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

std::string serialize(const CurveRecord& r);  // one JSON line
CurveRecord parse_curve_record(const std::string& line);

// Reads a JSON-lines fixture file; blank lines and lines starting with '#' are skipped.
// Throws IoError when the file cannot be read, InputError on a corrupt line.
std::vector<CurveRecord> load_fixtures(const std::string& path);
const CurveRecord& find_label(const std::vector<CurveRecord>& rows, const std::string& label);

// Echo of what was asked for.
struct ReportInput {
  std::string command;
  std::optional<std::string> label;
  std::array<Rational, 5> a_invariants;
  std::optional<long> p;
  friend bool operator==(const ReportInput&, const ReportInput&) = default;
};

struct TorsionDocument {
  ReportInput input;
  TorsionData torsion;
};

struct ClassifyDocument {
  ReportInput input;
  GrowthReport report;
  std::optional<bool> matches_fixture;  // set when the input came from a fixture row
};

struct GenerateDocument {
  FamilyCurve family;
  GrowthReport report;
  bool verified = false;  // report agrees with the expected groups
};

// indent < 0 gives a single line.
std::string serialize(const TorsionDocument& d, int indent = -1);
std::string serialize(const ClassifyDocument& d, int indent = -1);
std::string serialize(const GenerateDocument& d, int indent = -1);

TorsionDocument parse_torsion_document(const std::string& s);
ClassifyDocument parse_classify_document(const std::string& s);
GenerateDocument parse_generate_document(const std::string& s);

}  // namespace ztower
