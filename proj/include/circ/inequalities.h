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

#ifndef CIRC_INEQUALITIES_H_
#define CIRC_INEQUALITIES_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circ/core.h"
#include "circ/linear_inequality.h"
#include "circ/minors.h"

namespace circ {

// x_i >= 0, -x_i >= -1 and the row covers, 3n inequalities grouped by kind.
std::vector<LinearInequality> BooleanFacets(const CirculantInstance& inst);

// sum x_i >= ceil(n/k). A facet exactly when k does not divide n.
LinearInequality RankInequality(const CirculantInstance& inst);

// 2 on W, 1 elsewhere, rhs ceil(n'/k'). Throws InvalidInput on a bad cert.
LinearInequality MinorInequality(const MinorCert& cert);

struct MinorClass {
  bool relevant;         // n' != 0 mod k' and ceil(n'/k') > ceil(n/k)
  bool conjecture_form;  // n' == 1 mod k'
  bool rank_dominated;   // ceil(n'/k') == ceil(n/k)
};
MinorClass ClassifyMinor(const MinorCert& cert);

struct ValidityResult {
  bool valid;
  std::optional<IndexSet> counterexample;
};

// Exhaustive over minimal covers. Negative coefficients are handled by
// adding their columns to every minimal cover, which attains the minimum of
// a.x over all covers.
ValidityResult CheckValidity(const CirculantInstance& inst,
                             const LinearInequality& ineq,
                             const Limits& limits = {});
ValidityResult CheckValidity(const CirculantInstance& inst,
                             const LinearInequality& ineq,
                             const std::vector<IndexSet>& minimal_covers);

struct FacetReport {
  bool valid = false;
  std::vector<IndexSet> roots;
  // Dimension of the affine hull of the roots; -1 with no roots.
  int affine_rank = -1;
  bool is_facet = false;
  std::map<std::string, bool> structural_checks;
};

// Roots are the tight minimal covers plus tight covers of size <= tau+2
// (the latter only while that search stays under limits.max_candidates).
FacetReport MakeFacetReport(const CirculantInstance& inst,
                            const LinearInequality& ineq,
                            const Limits& limits = {});
FacetReport MakeFacetReport(const CirculantInstance& inst,
                            const LinearInequality& ineq,
                            const std::vector<IndexSet>& minimal_covers,
                            const Limits& limits = {});

// Dimension of the affine hull of the given 0/1 points, exact arithmetic.
int AffineRank(const std::vector<IndexSet>& points);

// Necessary conditions on non-boolean, non-rank facets written as
//   sum_{i in W} a_i x_i + a0 sum_{i not in W} x_i >= alpha
// with a0 the minimum coefficient and W the indices above it. Each check is
// reported by name; nothing is asserted. Throws InvalidInput if some
// coefficient is not positive or all coefficients coincide.
std::map<std::string, bool> StructuralBattery(const CirculantInstance& inst,
                                              const LinearInequality& ineq);

}  // namespace circ

#endif  // CIRC_INEQUALITIES_H_
