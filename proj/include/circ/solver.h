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

#ifndef CIRC_SOLVER_H_
#define CIRC_SOLVER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "circ/core.h"
#include "circ/inequalities.h"
#include "circ/linear_inequality.h"
#include "circ/minors.h"
#include "circ/ratlp.h"
#include "circ/separation.h"

namespace circ {

struct SeparationRound {
  RationalVector lp_point;
  Rational lp_value;
  SeparationOutcome outcome;
};

// Attached when the cutting-plane loop stops at a fractional point that no
// transversal inequality cuts off.
struct CounterexampleReport {
  RationalVector lp_point;
  std::vector<LinearInequality> cut_pool;
  std::vector<SeparationRound> transcript;
};

struct SolveResult {
  Rational optimal_value;
  IndexSet optimal_cover;
  std::vector<LinearInequality> cuts_added;
  int iterations = 0;
  bool certified_exact = false;
  // Final LP objective; a lower bound on the optimum.
  Rational lp_bound;
  std::optional<std::uint64_t> seed;
  std::optional<CounterexampleReport> counterexample;
};

// Minimum weight over minimal covers; ties go to the lexicographically
// smallest cover. Weights must be non-negative.
SolveResult SolveIPBruteForce(const CirculantInstance& inst,
                              std::span<const Rational> weights,
                              const Limits& limits = {});

// LP over row covers (and optionally the rank constraint) with 0 <= x <= 1.
LPSolution SolveBooleanRelaxation(const CirculantInstance& inst,
                                  std::span<const Rational> weights,
                                  bool with_rank);

// Cutting planes over transversal inequalities on C_{sk}^k. Exact for
// s in {2, 3}; for larger s the result is certified only when the final LP
// point is integral, otherwise a rounded cover is returned.
SolveResult SolveCuttingPlane(const CirculantInstance& inst,
                              std::span<const Rational> weights);

struct S1Entry {
  LinearInequality inequality;
  bool composite = false;  // rank constraint plus a row cover
  std::optional<FacetReport> report;
};

// All s^k transversal inequalities of C_{sk}^k in odometer order.
std::vector<S1Entry> EnumerateS1Inequalities(const CirculantInstance& inst,
                                             const Limits& limits = {},
                                             bool with_facet_reports = true);

struct ConjectureRow {
  IndexSet w;
  int n_prime;
  int k_prime;
  bool conjecture_form;
  bool is_facet;
};

struct ConjectureReport {
  int relevant = 0;
  int agreements = 0;
  int disagreements = 0;
  // (conjecture_form, is_facet) -> count over relevant certificates.
  std::map<std::pair<bool, bool>, int> table;
  std::vector<ConjectureRow> disagreeing;
};

ConjectureReport ConjectureScan(const CirculantInstance& inst,
                                const Limits& limits = {});

// Integer weights drawn uniformly from [lo, hi] with a 64-bit Mersenne
// Twister seeded by `seed`.
RationalVector RandomWeights(int n, std::uint64_t seed, int lo = 1, int hi = 10);

}  // namespace circ

#endif  // CIRC_SOLVER_H_
