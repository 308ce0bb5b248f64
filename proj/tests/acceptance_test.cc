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

// Acceptance suite: prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails. argv[1] is the path of the circ_cli binary.

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "circ/core.h"
#include "circ/inequalities.h"
#include "circ/json_io.h"
#include "circ/minors.h"
#include "circ/separation.h"
#include "circ/solver.h"

namespace circ {
namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string g_cli;

std::pair<int, std::string> RunCli(const std::string& args) {
  const std::string cmd = g_cli + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome Minor30By6() {
  const auto [code, out] = RunCli("minor from-w --n 30 --k 6 --w 0,5,8,15,16,19");
  if (code != 0) return {false, "cli exit code " + std::to_string(code)};
  const MinorCert cert = CertFromJson(Json::parse(out));
  if (cert.n1 * 30 != 6 * cert.n2 + 7 * cert.n3) return {false, "n1 n != k n2 + (k+1) n3"};
  if (cert.n_prime != 11 || cert.k_prime != 2) return {false, "(n',k') != (11,2)"};
  const auto ineq = MinorInequality(cert);
  if (ineq.rhs != 6 || ineq.rhs != cert.instance().s() + 1) return {false, "rhs != 6"};
  if (ContractionIsCirculant(cert) != std::make_pair(11, 2)) return {false, "contraction"};
  std::ostringstream d;
  d << "n1=" << cert.n1 << " n2=" << cert.n2 << " n3=" << cert.n3
    << " (n',k')=(11,2) rhs=6";
  return {true, d.str()};
}

Outcome Idealness() {
  int checked = 0;
  for (auto [n, k] : {std::pair{6, 3}, {9, 3}, {8, 4}, {10, 2}}) {
    const CirculantInstance inst(n, k);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto w = RandomWeights(n, seed);
      const auto lp = SolveBooleanRelaxation(inst, w, false);
      const auto bf = SolveIPBruteForce(inst, w);
      if (!lp.is_integral || lp.objective_value != bf.optimal_value) {
        return {false, "C_" + std::to_string(n) + "^" + std::to_string(k) +
                           " seed " + std::to_string(seed)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " weight vectors, all integral and exact"};
}

Outcome CuttingPlaneExact(const std::vector<int>& ks, int s) {
  int checked = 0, cuts = 0;
  for (int k : ks) {
    const CirculantInstance inst(s * k, k);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto w = RandomWeights(inst.n(), seed);
      SolveResult cp;
      try {
        cp = SolveCuttingPlane(inst, w);
      } catch (const InvariantViolation& e) {
        return {false, std::string("invariant violation: ") + e.what()};
      }
      if (cp.counterexample) {
        return {false, "counterexample on C_" + std::to_string(inst.n()) + "^" +
                           std::to_string(k) + " seed " + std::to_string(seed) +
                           ": " + ToJson(cp).dump()};
      }
      if (cp.optimal_value != SolveIPBruteForce(inst, w).optimal_value) {
        return {false, "value mismatch seed " + std::to_string(seed)};
      }
      cuts += static_cast<int>(cp.cuts_added.size());
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " runs exact, " + std::to_string(cuts) +
                    " cuts total"};
}

Outcome SeparationEquivalence() {
  std::mt19937_64 rng(2026);
  int checked = 0, violated = 0;
  for (auto [s, k] : {std::pair{2, 5}, {2, 6}, {3, 4}, {3, 5}}) {
    const CirculantInstance inst(s * k, k);
    for (int trial = 0; trial < 500; ++trial) {
      RationalVector x(inst.n());
      for (auto& v : x) {
        const long den = 1 + static_cast<long>(rng() % 12);
        v = Rational(static_cast<long>(rng() % (den + 1)), den);
        v.canonicalize();
      }
      const auto dp = Separate(inst, x);
      const auto bf = BruteForceSeparate(inst, x);
      if (dp.violated != bf.violated || dp.path_cost != bf.path_cost || dp.w != bf.w) {
        return {false, "disagreement on (s,k)=(" + std::to_string(s) + "," +
                           std::to_string(k) + ")"};
      }
      violated += dp.violated;
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " points agree (" + std::to_string(violated) +
                    " violated)"};
}

Outcome FacetRanks() {
  const CirculantInstance c105(10, 5);
  LinearInequality ineq;
  for (int i = 0; i < 10; ++i) ineq.coeffs.emplace_back(i % 2 == 0 ? 2 : 1);
  ineq.rhs = 3;
  const auto rep = MakeFacetReport(c105, ineq);
  if (rep.affine_rank != 9 || !rep.is_facet) {
    return {false, "C_10^5 affineRank " + std::to_string(rep.affine_rank)};
  }
  const CirculantInstance c63(6, 3), c83(8, 3);
  if (MakeFacetReport(c63, RankInequality(c63)).is_facet) return {false, "C_6^3 rank facet"};
  if (!MakeFacetReport(c83, RankInequality(c83)).is_facet) return {false, "C_8^3 rank not facet"};
  return {true, "C_10^5 affineRank=9 facet; rank C_6^3 not facet, C_8^3 facet"};
}

const std::vector<std::pair<int, int>> kS1Instances = {{10, 5}, {12, 4}, {12, 6}, {15, 5}};

Outcome StructuralBatteryCheck() {
  int facets = 0;
  for (auto [n, k] : kS1Instances) {
    const CirculantInstance inst(n, k);
    for (const auto& e : EnumerateS1Inequalities(inst)) {
      if (!e.report || !e.report->is_facet) continue;
      ++facets;
      IndexSet w(n);
      for (int i = 0; i < n; ++i) {
        const auto& c = e.inequality.coeffs[i];
        if (c != 1 && c != 2) return {false, "coefficient outside {1,2}"};
        if (c == 2) w.insert(i);
      }
      if (w.size() != k) return {false, "|W| != k for " + w.ToString()};
      for (int j = 0; j < k; ++j) {
        int hits = 0;
        for (int i = j; i < n; i += k) hits += w.contains(i);
        if (hits != 1) return {false, "W misses a class: " + w.ToString()};
      }
      for (int i = 0; i < n; ++i) {
        if ((RowSupport(inst, i) - w).size() < 2) {
          return {false, "row meets complement once: " + w.ToString()};
        }
      }
      for (const auto& [name, ok] : e.report->structural_checks) {
        if (!ok) return {false, name + " failed for " + w.ToString()};
      }
    }
  }
  return {true, std::to_string(facets) + " facet-defining inequalities, zero violations"};
}

Outcome FacetCertificateShape() {
  int facets = 0;
  for (auto [n, k] : kS1Instances) {
    const CirculantInstance inst(n, k);
    for (const auto& e : EnumerateS1Inequalities(inst)) {
      if (!e.report || !e.report->is_facet) continue;
      ++facets;
      if (!e.inequality.cert) return {false, "facet without certificate"};
      const MinorCert& c = *e.inequality.cert;
      if (!ValidateCert(c) || c.n_prime != inst.s() * c.k_prime + 1) {
        return {false, "n' != s k' + 1 for W=" + c.w.ToString()};
      }
    }
  }
  return {true, std::to_string(facets) + " certificates satisfy n' = s k' + 1"};
}

bool ExhaustiveHost(int np, int kp) {
  for (int s = 2; s <= np; ++s) {
    for (int k = 2; k <= 4 * np + 10; ++k) {
      const long long n = static_cast<long long>(s) * k;
      if (np < n && kp * n <= static_cast<long long>(np) * k &&
          static_cast<long long>(np) * (k + 1) <= static_cast<long long>(kp + 1) * n) {
        return true;
      }
    }
  }
  return false;
}

Outcome Embeddability() {
  int pairs = 0, embeddable = 0;
  for (int kp = 2; kp <= 8; ++kp) {
    for (int np = kp + 1; np <= 30; ++np) {
      if (np % kp == 0) continue;
      const auto witness = EmbeddableInSk(np, kp);
      if (witness.has_value() != ExhaustiveHost(np, kp)) {
        return {false, "disagreement at (n',k')=(" + std::to_string(np) + "," +
                           std::to_string(kp) + ")"};
      }
      ++pairs;
      embeddable += witness.has_value();
    }
  }
  const auto w = EmbeddableInSk(7, 3);
  if (!w || w->s * w->k != 14 || w->k != 7) return {false, "(7,3) witness is not C_14^7"};
  const CirculantInstance host(14, 7);
  const auto cert = FindTransversalMinor(host, 7, 3);
  if (!cert || !ValidateCert(*cert) || ContractionIsCirculant(*cert) != std::make_pair(7, 3)) {
    return {false, "no verified C_7^3 minor of C_14^7"};
  }
  return {true, std::to_string(pairs) + " pairs agree (" + std::to_string(embeddable) +
                    " embeddable); C_7^3 minor of C_14^7 verified, W=" + cert->w.ToString()};
}

Outcome BooleanPlusRank() {
  int checked = 0;
  for (auto [n, k] : {std::pair{7, 3}, {10, 3}, {11, 3}, {13, 4}, {14, 4}}) {
    const CirculantInstance inst(n, k);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto w = RandomWeights(n, seed);
      const auto lp = SolveBooleanRelaxation(inst, w, true);
      if (!lp.is_integral) {
        return {false, "fractional optimum on C_" + std::to_string(n) + "^" +
                           std::to_string(k) + " seed " + std::to_string(seed)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " LPs, zero fractional optima"};
}

Outcome ConjectureScans(bool& reported) {
  std::ostringstream d;
  int disagreements = 0;
  for (auto [n, k] : kS1Instances) {
    const auto report = ConjectureScan(CirculantInstance(n, k));
    d << "C_" << n << "^" << k << ": relevant=" << report.relevant
      << " disagreements=" << report.disagreements << "; ";
    disagreements += report.disagreements;
    if (report.disagreements > 0) {
      std::cout << "  disagreements on C_" << n << "^" << k << ": "
                << ToJson(report).dump() << '\n';
    }
  }
  reported = disagreements > 0;
  return {disagreements == 0, d.str()};
}

struct Criterion {
  std::string id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
  bool gating = true;
};

}  // namespace
}  // namespace circ

int main(int argc, char** argv) {
  using namespace circ;
  if (argc < 2) {
    std::cerr << "usage: acceptance_test <path to circ_cli>\n";
    return 2;
  }
  g_cli = argv[1];
  bool reported = false;
  const std::vector<Criterion> criteria = {
      {"AC1", "C_30^6 transversal minor via CLI", 1.0, Minor30By6},
      {"AC2", "idealness fixtures", 60.0, Idealness},
      {"AC3", "cutting plane exact on C_2k^k, k=3..6", 300.0,
       [] { return CuttingPlaneExact({3, 4, 5, 6}, 2); }},
      {"AC4", "cutting plane exact on C_3k^k, k=3..5", 600.0,
       [] { return CuttingPlaneExact({3, 4, 5}, 3); }},
      {"AC5", "separation oracle equivalence", 120.0, SeparationEquivalence},
      {"AC6", "facet rank checks", 60.0, FacetRanks},
      {"AC7", "structural battery on facet-defining inequalities", 600.0,
       StructuralBatteryCheck},
      {"AC8", "certificates satisfy n' = s k' + 1", 600.0, FacetCertificateShape},
      {"AC9", "embeddability agrees with exhaustive search", 60.0, Embeddability},
      {"AC10", "boolean facets plus rank are integral", 600.0, BooleanPlusRank},
      {"AC11", "conjecture scan", 600.0, [&] { return ConjectureScans(reported); },
       false},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && secs > c.limit_seconds) {
      out = {false, out.detail + " (over time limit)"};
    }
    std::string tag = out.pass ? "[PASS]" : "[FAIL]";
    if (!out.pass && !c.gating && reported) tag = "[REPORTED]";
    if (!out.pass && (c.gating || !reported)) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << tag << ' ' << c.id << ' ' << c.name << " (" << timing << "): "
              << out.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
