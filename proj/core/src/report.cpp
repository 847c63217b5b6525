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

#include "ztower/report.hpp"

#include <fstream>

#include "json.hpp"
#include "ztower/errors.hpp"

namespace ztower {

using json = nlohmann::ordered_json;

namespace {

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer n;
    if (n.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad integer '" + j.get<std::string>() + "'");
    return n;
  }
  throw InputError("expected an integer, got " + j.dump());
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError("expected a rational, got " + j.dump());
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) {
    throw InputError("bad rational '" + j.get<std::string>() + "'");
  }
  q.canonicalize();
  return q;
}

json optional_group(const std::optional<TorsionGroup>& g) { return g ? json(g->str()) : json(nullptr); }

std::optional<TorsionGroup> optional_group_from(const json& obj, const char* key) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return TorsionGroup::parse(obj.at(key).get<std::string>());
}

json point_json(const Point& P) {
  if (P.infinity) return json("infinity");
  json j = json::object();
  j["x"] = rational_str(P.x);
  j["y"] = rational_str(P.y);
  return j;
}

Point point_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") return Point::at_infinity();
  return Point::affine(rational_from(j.at("x")), rational_from(j.at("y")));
}

json ainvs_json(const std::array<Rational, 5>& a) {
  json arr = json::array();
  for (const auto& c : a) arr.push_back(rational_str(c));
  return arr;
}

std::array<Rational, 5> ainvs_from(const json& j) {
  if (!j.is_array() || j.size() != 5) throw InputError("a_invariants must have 5 entries");
  std::array<Rational, 5> a;
  for (int i = 0; i < 5; ++i) a[i] = rational_from(j[i]);
  return a;
}

json input_json(const ReportInput& in) {
  json j = json::object();
  j["command"] = in.command;
  j["label"] = in.label ? json(*in.label) : json(nullptr);
  j["a_invariants"] = ainvs_json(in.a_invariants);
  j["p"] = in.p ? json(*in.p) : json(nullptr);
  return j;
}

ReportInput input_from(const json& j) {
  ReportInput in;
  in.command = j.at("command").get<std::string>();
  if (!j.at("label").is_null()) in.label = j.at("label").get<std::string>();
  in.a_invariants = ainvs_from(j.at("a_invariants"));
  if (!j.at("p").is_null()) in.p = j.at("p").get<long>();
  return in;
}

json report_json(const GrowthReport& r) {
  json j = json::object();
  j["p"] = r.p;
  j["base"] = r.base.str();
  j["tower"] = r.tower.str();
  j["verdict"] = to_string(r.verdict);
  j["layer_of_growth"] = r.layer_of_growth ? json(*r.layer_of_growth) : json(nullptr);
  json ev = json::array();
  for (const Evidence& e : r.evidence) {
    json w = json::array();
    for (const auto& [k, v] : e.witness) w.push_back(json::array({k, v}));
    ev.push_back({{"claim", e.claim}, {"mechanism", e.mechanism}, {"citation", e.citation}, {"witness", w}});
  }
  j["evidence"] = ev;
  return j;
}

GrowthReport report_from(const json& j) {
  GrowthReport r;
  r.p = j.at("p").get<long>();
  r.base = TorsionGroup::parse(j.at("base").get<std::string>());
  r.tower = TorsionGroup::parse(j.at("tower").get<std::string>());
  const auto v = j.at("verdict").get<std::string>();
  if (v == "resolved") {
    r.verdict = Verdict::Resolved;
  } else if (v == "unresolved") {
    r.verdict = Verdict::Unresolved;
  } else {
    throw InputError("bad verdict '" + v + "'");
  }
  if (!j.at("layer_of_growth").is_null()) r.layer_of_growth = j.at("layer_of_growth").get<int>();
  for (const json& e : j.at("evidence")) {
    Evidence ev;
    ev.claim = e.at("claim").get<std::string>();
    ev.mechanism = e.at("mechanism").get<std::string>();
    ev.citation = e.at("citation").get<std::string>();
    for (const json& kv : e.at("witness")) ev.witness.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
    r.evidence.push_back(std::move(ev));
  }
  return r;
}

json header(const char* kind) {
  json j = json::object();
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

json parse_document(const std::string& s, const char* kind) {
  json j;
  try {
    j = json::parse(s);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("schema_version", 0) != kSchemaVersion) {
    throw InputError("unsupported schema_version");
  }
  if (j.value("kind", std::string()) != kind) throw InputError(std::string("expected a ") + kind + " document");
  return j;
}

// Turns nlohmann's exceptions (missing keys, wrong types) into InputError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Curve CurveRecord::curve() const {
  std::array<Rational, 5> a;
  for (int i = 0; i < 5; ++i) a[i] = Rational(a_invariants[i]);
  return Curve::from_ainvs(a);
}

std::string serialize(const CurveRecord& r) {
  json j = json::object();
  j["label"] = r.label;
  json a = json::array();
  for (const auto& c : r.a_invariants) a.push_back(integer_json(c));
  j["a_invariants"] = a;
  j["expected_base"] = r.expected_base.str();
  j["expected_tower_p2"] = optional_group(r.expected_tower_p2);
  j["expected_tower_p3"] = optional_group(r.expected_tower_p3);
  j["provenance"] = r.provenance;
  return j.dump();
}

CurveRecord parse_curve_record(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed fixture line: ") + e.what());
  }
  return guarded([&] {
    CurveRecord r;
    r.label = j.at("label").get<std::string>();
    const json& a = j.at("a_invariants");
    if (!a.is_array() || a.size() != 5) throw InputError("fixture " + r.label + ": a_invariants must have 5 entries");
    for (int i = 0; i < 5; ++i) r.a_invariants[i] = integer_from(a[i]);
    r.expected_base = TorsionGroup::parse(j.at("expected_base").get<std::string>());
    r.expected_tower_p2 = optional_group_from(j, "expected_tower_p2");
    r.expected_tower_p3 = optional_group_from(j, "expected_tower_p3");
    r.provenance = j.value("provenance", std::string());
    return r;
  });
}

std::vector<CurveRecord> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read fixture file '" + path + "'");
  std::vector<CurveRecord> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      rows.push_back(parse_curve_record(line));
    } catch (const InputError& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return rows;
}

const CurveRecord& find_label(const std::vector<CurveRecord>& rows, const std::string& label) {
  for (const auto& r : rows) {
    if (r.label == label) return r;
  }
  throw InputError("unknown label '" + label + "'");
}

std::string serialize(const TorsionDocument& d, int indent) {
  json j = header("torsion");
  j["input"] = input_json(d.input);
  j["group"] = d.torsion.group.str();
  json gens = json::array();
  for (const auto& P : d.torsion.generators) gens.push_back(point_json(P));
  j["generators"] = gens;
  return j.dump(indent);
}

TorsionDocument parse_torsion_document(const std::string& s) {
  json j = parse_document(s, "torsion");
  return guarded([&] {
    TorsionDocument d;
    d.input = input_from(j.at("input"));
    d.torsion.group = TorsionGroup::parse(j.at("group").get<std::string>());
    for (const json& P : j.at("generators")) d.torsion.generators.push_back(point_from(P));
    return d;
  });
}

std::string serialize(const ClassifyDocument& d, int indent) {
  json j = header("classify");
  j["input"] = input_json(d.input);
  j["report"] = report_json(d.report);
  j["matches_fixture"] = d.matches_fixture ? json(*d.matches_fixture) : json(nullptr);
  return j.dump(indent);
}

ClassifyDocument parse_classify_document(const std::string& s) {
  json j = parse_document(s, "classify");
  return guarded([&] {
    ClassifyDocument d;
    d.input = input_from(j.at("input"));
    d.report = report_from(j.at("report"));
    if (!j.at("matches_fixture").is_null()) d.matches_fixture = j.at("matches_fixture").get<bool>();
    return d;
  });
}

std::string serialize(const GenerateDocument& d, int indent) {
  const FamilyCurve& f = d.family;
  json j = header("generate");
  json c = json::object();
  c["family"] = to_string(f.family);
  c["p"] = f.p;
  if (f.form) {
    c["form"] = {{"form", to_string(f.form->form)},
                 {"k", f.form->k},
                 {"u", f.form->u.get_str()},
                 {"v", f.form->v.get_str()},
                 {"target", f.form->target.get_str()}};
  } else {
    c["form"] = nullptr;
  }
  c["parameter"] = rational_str(f.parameter);
  c["twist"] = f.twist.get_str();
  c["a_invariants"] = ainvs_json(f.curve.ainvs());
  c["j"] = rational_str(f.curve.j_invariant());
  c["family_j"] = rational_str(f.family_j);
  c["expected_base"] = f.expected_base.str();
  c["expected_tower"] = f.expected_tower.str();
  c["tower_p"] = f.tower_p;
  j["curve"] = c;
  j["report"] = report_json(d.report);
  j["verified"] = d.verified;
  return j.dump(indent);
}

GenerateDocument parse_generate_document(const std::string& s) {
  json j = parse_document(s, "generate");
  return guarded([&] {
    GenerateDocument d;
    const json& c = j.at("curve");
    FamilyCurve& f = d.family;
    f.family = parse_family(c.at("family").get<std::string>());
    f.p = c.at("p").get<long>();
    if (!c.at("form").is_null()) {
      const json& fj = c.at("form");
      FormSolution s;
      s.form = parse_form(fj.at("form").get<std::string>());
      s.k = fj.at("k").get<int>();
      s.u = integer_from(fj.at("u"));
      s.v = integer_from(fj.at("v"));
      s.target = integer_from(fj.at("target"));
      f.form = s;
    }
    f.parameter = rational_from(c.at("parameter"));
    f.twist = integer_from(c.at("twist"));
    f.curve = Curve::from_ainvs(ainvs_from(c.at("a_invariants")));
    if (rational_from(c.at("j")) != f.curve.j_invariant()) throw InputError("j does not match a_invariants");
    f.family_j = rational_from(c.at("family_j"));
    f.expected_base = TorsionGroup::parse(c.at("expected_base").get<std::string>());
    f.expected_tower = TorsionGroup::parse(c.at("expected_tower").get<std::string>());
    f.tower_p = c.at("tower_p").get<long>();
    d.report = report_from(j.at("report"));
    d.verified = j.at("verified").get<bool>();
    return d;
  });
}

}  // namespace ztower
