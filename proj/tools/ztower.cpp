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

// ztower: rational torsion and torsion growth in Z_p-towers, from the command line.
// JSON on stdout, diagnostics on stderr. Exit 0 ok, 1 mismatch or unresolved, 2 bad input.

#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ztower/classifier.hpp"
#include "ztower/errors.hpp"
#include "ztower/factor.hpp"
#include "ztower/families.hpp"
#include "ztower/report.hpp"
#include "ztower/torsion.hpp"

using namespace ztower;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string a;
  std::string label;
  std::string fixtures;
  int sample_size = 50;
  bool pretty = false;
  bool verbose = false;

  int indent() const { return pretty ? 2 : -1; }
};

void log(const Common& c, const std::string& msg) {
  if (c.verbose) std::cerr << "ztower: " << msg << '\n';
}

std::string fixture_path(const Common& c) {
  if (!c.fixtures.empty()) return c.fixtures;
  if (const char* env = std::getenv("TORSION_TOWER_FIXTURES"); env && *env) return env;
  return ZTOWER_DEFAULT_FIXTURES;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Rational parse_rational(std::string s) {
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw InputError("bad number '" + s + "'");
  q.canonicalize();
  return q;
}

struct CurveInput {
  ReportInput echo;
  Curve curve;
  std::optional<CurveRecord> record;
};

CurveInput read_curve(const Common& c, const std::string& command) {
  CurveInput in;
  in.echo.command = command;
  if (!c.a.empty() == !c.label.empty()) throw InputError("give exactly one of --a or --label");
  if (!c.label.empty()) {
    auto rows = load_fixtures(fixture_path(c));
    in.record = find_label(rows, c.label);
    in.echo.label = c.label;
    for (int i = 0; i < 5; ++i) in.echo.a_invariants[i] = Rational(in.record->a_invariants[i]);
  } else {
    auto parts = split(c.a, ',');
    if (parts.size() != 5) throw InputError("--a needs five comma-separated coefficients a1,a2,a3,a4,a6");
    for (int i = 0; i < 5; ++i) in.echo.a_invariants[i] = parse_rational(parts[i]);
  }
  in.curve = Curve::from_ainvs(in.echo.a_invariants);
  return in;
}

long checked_prime(long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw NotPrime(std::to_string(p));
  return p;
}

int cmd_torsion(const Common& c) {
  CurveInput in = read_curve(c, "torsion");
  TorsionDocument doc{in.echo, rational_torsion(in.curve)};
  std::cout << serialize(doc, c.indent()) << '\n';
  if (in.record && doc.torsion.group != in.record->expected_base) {
    std::cerr << "ztower: " << c.label << ": expected " << in.record->expected_base.str() << '\n';
    return 1;
  }
  return 0;
}

std::optional<TorsionGroup> expected_tower(const CurveRecord& r, long p) {
  if (p == 2) return r.expected_tower_p2;
  if (p == 3) return r.expected_tower_p3;
  return r.expected_base;  // no growth for p >= 5
}

int cmd_classify(const Common& c, long p) {
  checked_prime(p);
  CurveInput in = read_curve(c, "classify");
  in.echo.p = p;
  ClassifyDocument doc{in.echo, classify(in.curve, p, {c.sample_size}), std::nullopt};
  if (in.record) {
    auto want = expected_tower(*in.record, p);
    if (want) doc.matches_fixture = doc.report.base == in.record->expected_base && doc.report.tower == *want;
  }
  std::cout << serialize(doc, c.indent()) << '\n';
  if (doc.report.verdict == Verdict::Unresolved) return 1;
  return doc.matches_fixture.value_or(true) ? 0 : 1;
}

GenerateDocument verify(const FamilyCurve& fc, int sample_size) {
  GenerateDocument doc;
  doc.family = fc;
  doc.report = classify(fc.curve, fc.tower_p, {sample_size});
  doc.verified = doc.report.verdict == Verdict::Resolved && doc.report.base == fc.expected_base &&
                 doc.report.tower == fc.expected_tower;
  return doc;
}

struct GenerateArgs {
  std::string family;
  std::optional<long> p;
  std::optional<int> k;
  std::string t = "2";
  int n = 7;
  int count = 1;
};

int cmd_generate(const Common& c, const GenerateArgs& g) {
  const Family fam = parse_family(g.family);
  if (g.count < 1) throw InputError("--count must be positive");
  std::vector<FamilyParams> params;
  if (uses_split_prime(fam)) {
    std::uint64_t p = static_cast<std::uint64_t>(g.p.value_or(7));
    checked_prime(static_cast<long>(p));
    if (p % 3 != 1) throw InputError("--p must be 1 mod 3 for family " + g.family);
    while (static_cast<int>(params.size()) < g.count) {
      if (p % 3 == 1 && is_prime(p)) params.push_back({fam, static_cast<long>(p), g.k, 2, 7});
      ++p;
    }
  } else {
    Rational t = parse_rational(g.t);
    for (int i = 0; i < g.count; ++i) params.push_back({fam, 7, std::nullopt, t + i, g.n});
  }

  std::vector<std::future<GenerateDocument>> jobs;
  for (const auto& fp : params) {
    jobs.push_back(std::async(std::launch::async, [fp, &c] { return verify(gen_curve(fp), c.sample_size); }));
  }
  int rc = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      GenerateDocument doc = jobs[i].get();
      if (!doc.verified) {
        std::cerr << "ztower: " << g.family << " curve " << i << " did not verify: got " << doc.report.base.str()
                  << " -> " << doc.report.tower.str() << '\n';
        rc = 1;
      }
      std::cout << serialize(doc, c.indent()) << '\n';
    } catch (const InputError& e) {
      // degenerate parameter values in a t-range are skipped, not fatal
      if (params.size() == 1) throw;
      std::cerr << "ztower: skipping t=" << params[i].t.get_str() << ": " << e.what() << '\n';
    }
  }
  return rc;
}

struct RowResult {
  std::string label;
  long p;
  TorsionGroup expected_base, expected_tower;
  GrowthReport report;
  bool match = false;
};

int cmd_verify_tables(const Common& c) {
  const std::string path = fixture_path(c);
  auto rows = load_fixtures(path);
  log(c, "loaded " + std::to_string(rows.size()) + " rows from " + path);

  std::vector<std::future<RowResult>> jobs;
  for (const auto& r : rows) {
    for (long p : {2L, 3L}) {
      auto want = p == 2 ? r.expected_tower_p2 : r.expected_tower_p3;
      if (!want) continue;
      jobs.push_back(std::async(std::launch::async, [&r, p, want, &c] {
        RowResult res{r.label, p, r.expected_base, *want, classify(r.curve(), p, {c.sample_size})};
        res.match = res.report.verdict == Verdict::Resolved && res.report.base == res.expected_base &&
                    res.report.tower == res.expected_tower;
        return res;
      }));
    }
  }

  json out = json::object();
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "verify-tables";
  out["fixtures"] = path;
  json arr = json::array();
  long matched[4] = {0, 0, 0, 0}, total[4] = {0, 0, 0, 0};
  for (auto& job : jobs) {
    RowResult r = job.get();
    ++total[r.p];
    if (r.match) {
      ++matched[r.p];
    } else {
      std::cerr << "ztower: mismatch " << r.label << " p=" << r.p << ": expected " << r.expected_base.str() << " -> "
                << r.expected_tower.str() << ", got " << r.report.base.str() << " -> " << r.report.tower.str() << '\n';
    }
    arr.push_back({{"label", r.label},
                   {"p", r.p},
                   {"expected_base", r.expected_base.str()},
                   {"expected_tower", r.expected_tower.str()},
                   {"base", r.report.base.str()},
                   {"tower", r.report.tower.str()},
                   {"layer_of_growth", r.report.layer_of_growth ? json(*r.report.layer_of_growth) : json(nullptr)},
                   {"match", r.match}});
  }
  out["rows"] = arr;
  out["summary"] = {{"p2", {{"matched", matched[2]}, {"total", total[2]}}},
                    {"p3", {{"matched", matched[3]}, {"total", total[3]}}}};
  const bool ok = matched[2] == total[2] && matched[3] == total[3];
  out["all_match"] = ok;
  std::cout << out.dump(c.indent()) << '\n';
  return ok ? 0 : 1;
}

int cmd_factor(const Common& c, const std::string& poly) {
  auto parts = split(poly, ',');
  if (parts.empty()) throw InputError("--poly needs comma-separated coefficients, leading first");
  std::vector<Integer> coeffs;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    Rational q = parse_rational(*it);
    if (q.get_den() != 1) throw InputError("--poly coefficients must be integers");
    coeffs.push_back(q.get_num());
  }
  IntPoly f(coeffs);
  if (f.degree() < 1) throw InputError("--poly must have positive degree");
  QFactorization fac = factor_over_Q(f);
  json out = json::object();
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "factor";
  out["input"] = f.str();
  out["unit"] = fac.unit.get_str();
  json arr = json::array();
  for (const auto& [g, e] : fac.factors) {
    arr.push_back({{"factor", g.str()}, {"degree", g.degree()}, {"multiplicity", e}});
  }
  out["factors"] = arr;
  std::cout << out.dump(c.indent()) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational torsion of elliptic curves over Q and its growth in cyclotomic Z_p-extensions"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--fixtures", common.fixtures, "fixture JSON-lines file (default: $TORSION_TOWER_FIXTURES)");
  app.add_option("--sample-size", common.sample_size, "primes sampled per tower-membership test")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json-pretty", common.pretty, "indent JSON output");
  app.add_flag("-v,--verbose", common.verbose, "log progress to stderr");

  auto curve_opts = [&common](CLI::App* sub) {
    sub->add_option("--a", common.a, "a1,a2,a3,a4,a6");
    sub->add_option("--label", common.label, "fixture label, e.g. 14a2");
  };

  auto* torsion = app.add_subcommand("torsion", "E(Q)_tors with generators");
  curve_opts(torsion);

  long p = 2;
  auto* cls = app.add_subcommand("classify", "torsion over the cyclotomic Z_p-extension");
  curve_opts(cls);
  cls->add_option("--p", p, "prime")->required();

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "curves from the growth families, verified by classify");
  generate->add_option("--family", gen.family,
                       "z2xz2-over3, z3-to-z2xz6, triv-to-z7, z3-to-z9, z2xz2-over2, twist2")
      ->required();
  generate->add_option("--p", gen.p, "split prime p = 1 mod 3 (first of --count primes)");
  generate->add_option("--k", gen.k, "exponent of 3 in the form target");
  generate->add_option("--t", gen.t, "rational parameter for z2xz2-over2 and twist2");
  generate->add_option("--n", gen.n, "rational torsion order for twist2");
  generate->add_option("--count", gen.count, "number of curves");

  auto* verify_tables = app.add_subcommand("verify-tables", "classify every fixture row and compare");

  std::string poly;
  auto* factor = app.add_subcommand("factor", "factor a polynomial over Q");
  factor->add_option("--poly", poly, "coefficients, leading first, e.g. 1,0,-2")->required();

  // global options may also follow the subcommand
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*torsion) return cmd_torsion(common);
    if (*cls) return cmd_classify(common, p);
    if (*generate) return cmd_generate(common, gen);
    if (*verify_tables) return cmd_verify_tables(common);
    if (*factor) return cmd_factor(common, poly);
  } catch (const InputError& e) {
    std::cerr << "ztower: error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "ztower: error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ztower: failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
