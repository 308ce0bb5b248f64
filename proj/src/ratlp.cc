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

#include "circ/ratlp.h"

#include <string>

#include "circ/errors.h"

namespace circ {
namespace {

// Dense tableau. Columns: structural x, one surplus per row, artificials,
// then the right-hand side. Row `obj` holds reduced costs with the negated
// objective value in the last column.
class Tableau {
 public:
  Tableau(const LPProblem& problem, int n) : n_(n) {
    std::vector<const RationalVector*> lhs;
    std::vector<Rational> rhs;
    for (const auto& c : problem.constraints) {
      lhs.push_back(&c.coeffs);
      rhs.push_back(c.rhs);
    }
    const int bound_rows = n;
    rows_ = static_cast<int>(lhs.size()) + bound_rows;
    std::vector<bool> needs_artificial(rows_, false);
    int artificials = 0;
    for (int i = 0; i < static_cast<int>(rhs.size()); ++i) {
      if (rhs[i] > 0) {
        needs_artificial[i] = true;
        ++artificials;
      }
    }
    first_artificial_ = n + rows_;
    cols_ = n + rows_ + artificials;
    t_.assign(rows_, RationalVector(cols_ + 1, Rational(0)));
    basis_.assign(rows_, -1);

    int next_artificial = first_artificial_;
    for (int i = 0; i < rows_; ++i) {
      RationalVector& row = t_[i];
      // Row reads a.x - s_i = b.
      Rational b;
      if (i < static_cast<int>(lhs.size())) {
        for (int j = 0; j < n; ++j) row[j] = (*lhs[i])[j];
        b = rhs[i];
      } else {
        row[i - static_cast<int>(lhs.size())] = -1;
        b = -1;
      }
      row[n + i] = -1;
      row[cols_] = b;
      if (needs_artificial[i]) {
        row[next_artificial] = 1;
        basis_[i] = next_artificial++;
      } else {
        for (auto& v : row) v = -v;
        basis_[i] = n + i;
      }
    }
  }

  // Returns false when the problem is infeasible.
  bool PhaseOne() {
    obj_.assign(cols_ + 1, Rational(0));
    for (int j = first_artificial_; j < cols_; ++j) obj_[j] = 1;
    PriceOut();
    Iterate(cols_);
    if (obj_[cols_] != 0) return false;
    // Drive zero-level artificials out of the basis where possible.
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (t_[i][j] != 0) {
          Pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  void PhaseTwo(const RationalVector& objective) {
    obj_.assign(cols_ + 1, Rational(0));
    for (int j = 0; j < n_; ++j) obj_[j] = objective[j];
    PriceOut();
    Iterate(first_artificial_);
  }

  Rational Value() const { return -obj_[cols_]; }

  RationalVector Point() const {
    RationalVector x(n_, Rational(0));
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
    }
    return x;
  }

 private:
  void PriceOut() {
    for (int i = 0; i < rows_; ++i) {
      const Rational f = obj_[basis_[i]];
      if (f == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (t_[i][j] != 0) obj_[j] -= f * t_[i][j];
      }
    }
  }

  // Bland's rule over columns [0, limit).
  void Iterate(int limit) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) throw InvariantViolation("LP unbounded despite box bounds");
      Pivot(leave, enter);
    }
  }

  void Pivot(int row, int col) {
    RationalVector& p = t_[row];
    const Rational inv = 1 / p[col];
    std::vector<int> support;
    for (int j = 0; j <= cols_; ++j) {
      if (p[j] != 0) {
        p[j] *= inv;
        support.push_back(j);
      }
    }
    auto eliminate = [&](RationalVector& r) {
      if (r[col] == 0) return;
      const Rational f = r[col];
      for (int j : support) r[j] -= f * p[j];
    };
    for (int i = 0; i < rows_; ++i) {
      if (i != row) eliminate(t_[i]);
    }
    eliminate(obj_);
    basis_[row] = col;
  }

  int n_;
  int rows_ = 0;
  int cols_ = 0;
  int first_artificial_ = 0;
  std::vector<RationalVector> t_;
  RationalVector obj_;
  std::vector<int> basis_;
};

}  // namespace

LPSolution SolveLP(const LPProblem& problem) {
  const int n = static_cast<int>(problem.objective.size());
  for (const auto& c : problem.constraints) {
    if (c.dimension() != n) {
      throw InvalidInput("LP constraint has dimension " +
                         std::to_string(c.dimension()) + ", expected " +
                         std::to_string(n));
    }
  }
  Tableau tableau(problem, n);
  LPSolution sol;
  if (!tableau.PhaseOne()) {
    sol.status = LPStatus::kInfeasible;
    return sol;
  }
  tableau.PhaseTwo(problem.objective);
  sol.status = LPStatus::kOptimal;
  sol.point = tableau.Point();
  sol.objective_value = Dot(problem.objective, sol.point);
  if (sol.objective_value != tableau.Value()) {
    throw InvariantViolation("LP objective disagrees with its point");
  }
  sol.is_integral = true;
  for (const auto& v : sol.point) {
    if (v < 0 || v > 1) throw InvariantViolation("LP point leaves the unit box");
    if (!IsInteger(v)) sol.is_integral = false;
  }
  for (const auto& c : problem.constraints) {
    if (!c.IsSatisfiedBy(sol.point)) {
      throw InvariantViolation("LP point violates a constraint");
    }
  }
  return sol;
}

}  // namespace circ
