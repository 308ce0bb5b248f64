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

#include "circ/json_io.h"

#include <string>

namespace circ {
namespace {

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

Json ToJson(const CirculantInstance& inst) {
  return Json{{"n", inst.n()}, {"k", inst.k()}};
}

CirculantInstance InstanceFromJson(const Json& j) {
  return CirculantInstance(Field<int>(j, "n"), Field<int>(j, "k"));
}

Json ToJson(const IndexSet& s) { return Json(s.members()); }

IndexSet IndexSetFromJson(const Json& j, int universe) {
  if (!j.is_array()) throw InvalidInput("index set must be a JSON array");
  IndexSet s(universe);
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidInput("index set entries must be integers");
    const int i = v.get<int>();
    if (s.contains(i)) throw InvalidInput("index set has a duplicate entry");
    s.insert(i);
  }
  return s;
}

Json ToJson(const Rational& r) { return FormatRational(r); }

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return ParseRational(std::to_string(j.get<long long>()));
  throw InvalidInput("rational must be a \"p/q\" string or an integer");
}

Json ToJson(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(ToJson(r));
  return out;
}

RationalVector RationalVectorFromJson(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals");
  RationalVector out;
  for (const auto& v : j) out.push_back(RationalFromJson(v));
  return out;
}

Json ToJson(const MinorCert& cert) {
  return Json{{"n", cert.n},
              {"k", cert.k},
              {"W", ToJson(cert.w)},
              {"N", ToJson(cert.contracted)},
              {"d", cert.d},
              {"n1", cert.n1},
              {"n2", cert.n2},
              {"n3", cert.n3},
              {"nPrime", cert.n_prime},
              {"kPrime", cert.k_prime}};
}

MinorCert CertFromJson(const Json& j) {
  MinorCert cert;
  cert.n = Field<int>(j, "n");
  cert.k = Field<int>(j, "k");
  CirculantInstance(cert.n, cert.k);  // validates the pair
  cert.w = IndexSetFromJson(Field<Json>(j, "W"), cert.n);
  cert.contracted = IndexSetFromJson(Field<Json>(j, "N"), cert.n);
  cert.d = Field<int>(j, "d");
  cert.n1 = Field<int>(j, "n1");
  cert.n2 = Field<int>(j, "n2");
  cert.n3 = Field<int>(j, "n3");
  cert.n_prime = Field<int>(j, "nPrime");
  cert.k_prime = Field<int>(j, "kPrime");
  return cert;
}

Json ToJson(const LinearInequality& ineq) {
  Json out{{"coeffs", ToJson(ineq.coeffs)},
           {"rhs", ToJson(ineq.rhs)},
           {"kind", std::string(KindName(ineq.kind))}};
  if (ineq.cert) out["cert"] = ToJson(*ineq.cert);
  return out;
}

LinearInequality InequalityFromJson(const Json& j) {
  LinearInequality ineq;
  ineq.coeffs = RationalVectorFromJson(Field<Json>(j, "coeffs"));
  ineq.rhs = RationalFromJson(Field<Json>(j, "rhs"));
  ineq.kind = j.contains("kind") ? KindFromName(Field<std::string>(j, "kind"))
                                 : InequalityKind::kGeneric;
  if (j.contains("cert") && !j.at("cert").is_null()) {
    ineq.cert = CertFromJson(j.at("cert"));
    if (ineq.cert->n != ineq.dimension()) {
      throw InvalidInput("certificate dimension differs from coefficients");
    }
  }
  return ineq;
}

Json ToJson(const SeparationOutcome& outcome) {
  return Json{{"violated", outcome.violated},
              {"W", ToJson(outcome.w)},
              {"pathCost", ToJson(outcome.path_cost)},
              {"threshold", ToJson(outcome.threshold)}};
}

SeparationOutcome SeparationOutcomeFromJson(const Json& j, int universe) {
  SeparationOutcome out;
  out.violated = Field<bool>(j, "violated");
  out.w = IndexSetFromJson(Field<Json>(j, "W"), universe);
  out.path_cost = RationalFromJson(Field<Json>(j, "pathCost"));
  out.threshold = RationalFromJson(Field<Json>(j, "threshold"));
  return out;
}

Json ToJson(const FacetReport& report) {
  Json roots = Json::array();
  for (const auto& r : report.roots) roots.push_back(ToJson(r));
  Json checks = Json::object();
  for (const auto& [name, ok] : report.structural_checks) checks[name] = ok;
  return Json{{"valid", report.valid},
              {"roots", roots},
              {"affineRank", report.affine_rank},
              {"isFacet", report.is_facet},
              {"structuralChecks", checks}};
}

Json ToJson(const SolveResult& result) {
  Json cuts = Json::array();
  for (const auto& c : result.cuts_added) cuts.push_back(ToJson(c));
  Json out{{"optimalValue", ToJson(result.optimal_value)},
           {"optimalCover", ToJson(result.optimal_cover)},
           {"cutsAdded", cuts},
           {"iterations", result.iterations},
           {"certifiedExact", result.certified_exact},
           {"lpBound", ToJson(result.lp_bound)},
           {"seed", result.seed ? Json(*result.seed) : Json(nullptr)}};
  if (result.counterexample) {
    const auto& cx = *result.counterexample;
    Json pool = Json::array();
    for (const auto& c : cx.cut_pool) pool.push_back(ToJson(c));
    Json transcript = Json::array();
    for (const auto& round : cx.transcript) {
      transcript.push_back(Json{{"lpPoint", ToJson(round.lp_point)},
                                {"lpValue", ToJson(round.lp_value)},
                                {"outcome", ToJson(round.outcome)}});
    }
    out["counterexample"] = Json{{"lpPoint", ToJson(cx.lp_point)},
                                 {"cutPool", pool},
                                 {"transcript", transcript}};
  }
  return out;
}

Json ToJson(const S1Entry& entry) {
  Json out{{"inequality", ToJson(entry.inequality)},
           {"composite", entry.composite}};
  if (entry.inequality.cert) {
    const MinorClass cls = ClassifyMinor(*entry.inequality.cert);
    out["relevant"] = cls.relevant;
    out["conjectureForm"] = cls.conjecture_form;
  }
  if (entry.report) out["facetReport"] = ToJson(*entry.report);
  return out;
}

Json ToJson(const ConjectureReport& report) {
  Json table = Json::array();
  for (const auto& [key, count] : report.table) {
    table.push_back(Json{{"conjectureForm", key.first},
                         {"isFacet", key.second},
                         {"count", count}});
  }
  Json rows = Json::array();
  for (const auto& row : report.disagreeing) {
    rows.push_back(Json{{"W", ToJson(row.w)},
                        {"nPrime", row.n_prime},
                        {"kPrime", row.k_prime},
                        {"conjectureForm", row.conjecture_form},
                        {"isFacet", row.is_facet}});
  }
  return Json{{"relevant", report.relevant},
              {"agreements", report.agreements},
              {"disagreements", report.disagreements},
              {"table", table},
              {"disagreeing", rows}};
}

}  // namespace circ
