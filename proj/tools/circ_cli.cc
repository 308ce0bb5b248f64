// Copyright 2026 The circ Authors
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

// Command-line front end. Every subcommand prints one JSON document on
// stdout. Exit codes: 0 success, 2 invalid input, 3 bound exceeded,
// 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "circ/core.h"
#include "circ/errors.h"
#include "circ/inequalities.h"
#include "circ/json_io.h"
#include "circ/minors.h"
#include "circ/separation.h"
#include "circ/solver.h"

namespace {

using circ::Json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBound = 3;
constexpr int kExitInvariant = 4;

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw circ::InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw circ::InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw circ::InvalidInput("bad integer '" + item + "' in list");
    }
  }
  return out;
}

void Emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
  int n = 0;
  int k = 0;
  circ::Limits limits;
  bool minimal = false;
  std::string w_list;
  std::string cert_file;
  std::string point_file;
  std::string weights_file;
  std::string ineq_file;
  std::string method = "cuts";
  std::optional<std::uint64_t> seed;
  bool with_roots = false;
};

void AddInstance(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "number of columns")->required();
  app->add_option("--k", o.k, "ones per row")->required();
}

circ::CirculantInstance Instance(const Options& o) {
  return circ::CirculantInstance(o.n, o.k);
}

Json WithoutRoots(Json report) {
  report["rootCount"] = report["roots"].size();
  report.erase("roots");
  return report;
}

int Run(int argc, char** argv) {
  CLI::App app{"Exact set covering tools for circulant matrices"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-n", o.limits.max_n,
                 "largest n for exhaustive enumeration (default 36)");
  app.add_option("--max-candidates", o.limits.max_candidates,
                 "largest candidate count for exhaustive scans (default 1e6)");

  auto* gen = app.add_subcommand("gen", "print the instance JSON");
  AddInstance(gen, o);
  auto* tau = app.add_subcommand("tau", "covering number");
  AddInstance(tau, o);
  auto* covers = app.add_subcommand(
      "covers", "minimum covers, or all minimal covers with --minimal");
  AddInstance(covers, o);
  covers->add_flag("--minimal", o.minimal, "list every minimal cover");

  auto* minor = app.add_subcommand("minor", "circulant minor certificates");
  minor->require_subcommand(1);
  auto* from_w = minor->add_subcommand("from-w", "certificate for a transversal W");
  AddInstance(from_w, o);
  from_w->add_option("--w", o.w_list, "comma separated members of W")->required();

  auto* ineq = app.add_subcommand("ineq", "inequality generators");
  ineq->require_subcommand(1);
  auto* ineq_minor = ineq->add_subcommand("minor", "minor inequality of a certificate");
  ineq_minor->add_option("--cert", o.cert_file, "certificate JSON file")->required();
  auto* ineq_rank = ineq->add_subcommand("rank", "rank constraint");
  AddInstance(ineq_rank, o);
  auto* ineq_boolean = ineq->add_subcommand("boolean", "boolean facets");
  AddInstance(ineq_boolean, o);

  auto* separate = app.add_subcommand("separate", "separate transversal inequalities");
  AddInstance(separate, o);
  separate->add_option("--point", o.point_file, "JSON array of rationals")->required();

  auto* solve = app.add_subcommand("solve", "weighted set covering");
  AddInstance(solve, o);
  solve->add_option("--weights", o.weights_file, "JSON array of weights");
  solve->add_option("--method", o.method, "bruteforce or cuts")
      ->check(CLI::IsMember({"bruteforce", "cuts"}));
  solve->add_option("--seed", o.seed,
                    "seed for random weights in [1,10] when --weights is absent");

  auto* verify = app.add_subcommand("verify", "exhaustive checks");
  verify->require_subcommand(1);
  auto* facet = verify->add_subcommand("facet", "facet report for an inequality");
  AddInstance(facet, o);
  facet->add_option("--ineq", o.ineq_file, "inequality JSON file")->required();

  auto* describe = app.add_subcommand("describe", "all transversal inequalities");
  AddInstance(describe, o);
  describe->add_flag("--with-roots", o.with_roots, "include root lists");
  auto* conjecture = app.add_subcommand("conjecture", "facet vs n' = 1 mod k' scan");
  AddInstance(conjecture, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*gen) {
      Emit(circ::ToJson(Instance(o)));
    } else if (*tau) {
      Emit(Json{{"tau", circ::CoveringNumber(Instance(o))}});
    } else if (*covers) {
      const auto inst = Instance(o);
      Json list = Json::array();
      for (const auto& c : circ::EnumerateMinimalCovers(inst, o.limits)) {
        if (o.minimal || c.size() == inst.tau()) list.push_back(circ::ToJson(c));
      }
      Emit(list);
    } else if (*from_w) {
      const auto inst = Instance(o);
      const auto members = ParseIntList(o.w_list);
      const circ::MinorCert cert =
          circ::CertFromWPartition(inst, circ::IndexSet(inst.n(), members));
      circ::ContractionIsCirculant(cert);
      Emit(circ::ToJson(cert));
    } else if (*ineq_minor) {
      const auto cert = circ::CertFromJson(ReadJsonFile(o.cert_file));
      Emit(circ::ToJson(circ::MinorInequality(cert)));
    } else if (*ineq_rank) {
      Emit(circ::ToJson(circ::RankInequality(Instance(o))));
    } else if (*ineq_boolean) {
      Json list = Json::array();
      for (const auto& i : circ::BooleanFacets(Instance(o))) {
        list.push_back(circ::ToJson(i));
      }
      Emit(list);
    } else if (*separate) {
      const auto inst = Instance(o);
      const auto point = circ::RationalVectorFromJson(ReadJsonFile(o.point_file));
      Emit(circ::ToJson(circ::Separate(inst, point)));
    } else if (*solve) {
      const auto inst = Instance(o);
      circ::RationalVector weights;
      if (!o.weights_file.empty()) {
        weights = circ::RationalVectorFromJson(ReadJsonFile(o.weights_file));
      } else {
        if (!o.seed) o.seed = 0;
        weights = circ::RandomWeights(inst.n(), *o.seed);
      }
      circ::SolveResult result =
          o.method == "bruteforce"
              ? circ::SolveIPBruteForce(inst, weights, o.limits)
              : circ::SolveCuttingPlane(inst, weights);
      if (o.weights_file.empty()) result.seed = o.seed;
      Json out = circ::ToJson(result);
      out["weights"] = circ::ToJson(weights);
      out["method"] = o.method;
      Emit(out);
      if (result.counterexample) return kExitInvariant;
    } else if (*facet) {
      const auto inst = Instance(o);
      const auto inequality = circ::InequalityFromJson(ReadJsonFile(o.ineq_file));
      if (inequality.dimension() != inst.n()) {
        throw circ::InvalidInput("inequality dimension differs from n");
      }
      Emit(circ::ToJson(circ::MakeFacetReport(inst, inequality, o.limits)));
    } else if (*describe) {
      const auto inst = Instance(o);
      const auto entries = circ::EnumerateS1Inequalities(inst, o.limits, true);
      Json list = Json::array();
      int facets = 0;
      for (const auto& e : entries) {
        Json j = circ::ToJson(e);
        if (e.report && e.report->is_facet) ++facets;
        if (!o.with_roots && j.contains("facetReport")) {
          j["facetReport"] = WithoutRoots(j["facetReport"]);
        }
        list.push_back(std::move(j));
      }
      Emit(Json{{"instance", circ::ToJson(inst)},
                {"count", entries.size()},
                {"facetCount", facets},
                {"inequalities", list}});
    } else if (*conjecture) {
      const auto inst = Instance(o);
      Json out = circ::ToJson(circ::ConjectureScan(inst, o.limits));
      out["instance"] = circ::ToJson(inst);
      Emit(out);
    }
  } catch (const circ::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const circ::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const circ::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return Run(argc, argv); }
