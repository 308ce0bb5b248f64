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

#ifndef CIRC_RATLP_H_
#define CIRC_RATLP_H_

#include <vector>

#include "circ/linear_inequality.h"
#include "circ/rational.h"

namespace circ {

// min objective . x  subject to every constraint and 0 <= x <= 1.
struct LPProblem {
  RationalVector objective;
  std::vector<LinearInequality> constraints;
};

enum class LPStatus { kOptimal, kInfeasible };

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  RationalVector point;
  Rational objective_value;
  bool is_integral = false;
};

// Two-phase dense tableau simplex over exact rationals with Bland's rule.
// The returned optimum is a basic solution and is re-checked against every
// constraint before returning; a failed check throws InvariantViolation.
LPSolution SolveLP(const LPProblem& problem);

}  // namespace circ

#endif  // CIRC_RATLP_H_
