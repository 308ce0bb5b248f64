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

#include "circ/solver.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace circ {
namespace {

void CheckWeights(const CirculantInstance& inst,
                  std::span<const Rational> weights) {
  if (static_cast<int>(weights.size()) != inst.n()) {
    throw InvalidInput("weight vector has dimension " +
                       std::to_string(weights.size()) + ", expected " +
                       std::to_string(inst.n()));
  }
  for (const auto& w : weights) {
    if (w < 0) throw InvalidInput("weights must be non-negative");
  }
}

Rational Weight(const IndexSet& s, std::span<const Rational> weights) {
  Rational total = 0;
  for (int i : s.members()) total += weights[i];
  return total;
}

std::vector<LinearInequality> RowCovers(const CirculantInstance& inst) {
  std::vector<LinearInequality> rows;
  for (auto& ineq : BooleanFacets(inst)) {
    if (ineq.kind == InequalityKind::kRowCover) rows.push_back(std::move(ineq));
  }
  return rows;
}

// Support of a feasible LP point is a cover; drop columns from heaviest to
// lightest while the rest still covers.
IndexSet RoundToCover(const CirculantInstance& inst, const RationalVector& x,
                      std::span<const Rational> weights) {
  IndexSet cover(inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    if (x[i] > 0) cover.insert(i);
  }
  std::vector<int> order = cover.members();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  for (int i : order) {
    cover.erase(i);
    if (!IsCover(inst, cover)) cover.insert(i);
  }
  return cover;
}

}  // namespace

SolveResult SolveIPBruteForce(const CirculantInstance& inst,
                              std::span<const Rational> weights,
                              const Limits& limits) {
  CheckWeights(inst, weights);
  const auto covers = EnumerateMinimalCovers(inst, limits);
  SolveResult result;
  bool found = false;
  for (const IndexSet& cover : covers) {
    Rational value = Weight(cover, weights);
    if (!found || value < result.optimal_value) {
      result.optimal_value = std::move(value);
      result.optimal_cover = cover;
      found = true;
    }
  }
  result.certified_exact = true;
  result.lp_bound = result.optimal_value;
  return result;
}

LPSolution SolveBooleanRelaxation(const CirculantInstance& inst,
                                  std::span<const Rational> weights,
                                  bool with_rank) {
  CheckWeights(inst, weights);
  LPProblem lp;
  lp.objective.assign(weights.begin(), weights.end());
  lp.constraints = RowCovers(inst);
  if (with_rank) lp.constraints.push_back(RankInequality(inst));
  return SolveLP(lp);
}

SolveResult SolveCuttingPlane(const CirculantInstance& inst,
                              std::span<const Rational> weights) {
  const int s = inst.s();
  CheckWeights(inst, weights);
  const std::uint64_t max_rounds = TransversalCount(inst);

  LPProblem lp;
  lp.objective.assign(weights.begin(), weights.end());
  lp.constraints = RowCovers(inst);
  lp.constraints.push_back(RankInequality(inst));

  SolveResult result;
  std::vector<SeparationRound> transcript;
  std::vector<IndexSet> pool;
  while (true) {
    ++result.iterations;
    const LPSolution sol = SolveLP(lp);
    if (sol.status != LPStatus::kOptimal) {
      throw InvariantViolation("covering LP reported infeasible");
    }
    result.lp_bound = sol.objective_value;
    if (sol.is_integral) {
      result.optimal_cover = IndexSet(inst.n());
      for (int i = 0; i < inst.n(); ++i) {
        if (sol.point[i] == 1) result.optimal_cover.insert(i);
      }
      result.optimal_value = sol.objective_value;
      result.certified_exact = true;
      return result;
    }

    SeparationOutcome outcome = Separate(inst, sol.point);
    transcript.push_back({sol.point, sol.objective_value, outcome});
    if (outcome.violated) {
      if (std::find(pool.begin(), pool.end(), outcome.w) != pool.end() ||
          pool.size() >= max_rounds) {
        throw InvariantViolation("separation returned a cut already in the pool");
      }
      pool.push_back(outcome.w);
      LinearInequality cut = TransversalInequality(inst, outcome.w);
      lp.constraints.push_back(cut);
      result.cuts_added.push_back(std::move(cut));
      continue;
    }

    // No transversal inequality cuts the fractional point off.
    result.optimal_cover = RoundToCover(inst, sol.point, weights);
    result.optimal_value = Weight(result.optimal_cover, weights);
    result.certified_exact = false;
    if (s == 2 || s == 3) {
      result.counterexample =
          CounterexampleReport{sol.point, result.cuts_added, std::move(transcript)};
    }
    return result;
  }
}

std::vector<S1Entry> EnumerateS1Inequalities(const CirculantInstance& inst,
                                             const Limits& limits,
                                             bool with_facet_reports) {
  if (TransversalCount(inst) > static_cast<std::uint64_t>(limits.max_candidates)) {
    throw BoundExceeded("s^k exceeds the candidate bound");
  }
  std::vector<IndexSet> covers;
  const bool reports = with_facet_reports && inst.n() <= limits.max_n;
  if (reports) covers = EnumerateMinimalCovers(inst, limits);

  std::vector<S1Entry> out;
  ForEachTransversal(inst, [&](const IndexSet& w) {
    S1Entry entry;
    entry.inequality = TransversalInequality(inst, w);
    entry.composite = entry.inequality.kind != InequalityKind::kMinor;
    if (reports) entry.report = MakeFacetReport(inst, entry.inequality, covers, limits);
    out.push_back(std::move(entry));
    return true;
  });
  return out;
}

ConjectureReport ConjectureScan(const CirculantInstance& inst,
                                const Limits& limits) {
  if (inst.n() > limits.max_n) {
    throw BoundExceeded("conjecture scan needs facet reports; n exceeds bound");
  }
  ConjectureReport report;
  for (const S1Entry& entry : EnumerateS1Inequalities(inst, limits, true)) {
    if (!entry.inequality.cert) continue;
    const MinorCert& cert = *entry.inequality.cert;
    const MinorClass cls = ClassifyMinor(cert);
    if (!cls.relevant) continue;
    ++report.relevant;
    const bool facet = entry.report->is_facet;
    ++report.table[{cls.conjecture_form, facet}];
    if (cls.conjecture_form == facet) {
      ++report.agreements;
    } else {
      ++report.disagreements;
      report.disagreeing.push_back(
          {cert.w, cert.n_prime, cert.k_prime, cls.conjecture_form, facet});
    }
  }
  return report;
}

RationalVector RandomWeights(int n, std::uint64_t seed, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  RationalVector out(n);
  for (auto& w : out) w = dist(rng);
  return out;
}

}  // namespace circ
