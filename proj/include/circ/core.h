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

#ifndef CIRC_CORE_H_
#define CIRC_CORE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "circ/errors.h"
#include "circ/index_set.h"

namespace circ {

// The circulant matrix C_n^k: row i is the cyclic interval [i, i+k)_n.
class CirculantInstance {
 public:
  // Requires 2 <= k <= n-1.
  CirculantInstance(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  // ceil(n/k)
  int tau() const { return (n_ + k_ - 1) / k_; }
  bool k_divides_n() const { return n_ % k_ == 0; }
  // n/k; requires k | n.
  int s() const;

  friend bool operator==(const CirculantInstance&,
                         const CirculantInstance&) = default;

 private:
  int n_;
  int k_;
};

// A 0/1 matrix given by row supports over columns 0..num_cols-1.
//
// Construction removes dominating rows (keeping the first of any group of
// identical rows) and then drops zero columns. Labels map surviving rows
// and columns back to the indices they were built from.
class BinaryMatrix {
 public:
  BinaryMatrix(int num_cols, std::vector<IndexSet> rows,
               std::vector<int> row_labels, std::vector<int> column_labels);

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return num_cols_; }
  const std::vector<IndexSet>& rows() const { return rows_; }
  const std::vector<int>& row_labels() const { return row_labels_; }
  const std::vector<int>& column_labels() const { return column_labels_; }

 private:
  int num_cols_;
  std::vector<IndexSet> rows_;
  std::vector<int> row_labels_;
  std::vector<int> column_labels_;
};

IndexSet RowSupport(const CirculantInstance& inst, int i);

bool IsCover(const CirculantInstance& inst, const IndexSet& s);

// Also checks |S ∩ C^i| <= 2 on every row for minimal covers and throws
// InvariantViolation if that ever fails.
bool IsMinimalCover(const CirculantInstance& inst, const IndexSet& s);

int CoveringNumber(const CirculantInstance& inst);

// x^i = {i + hk : 0 <= h < ceil(n/k)}
IndexSet CanonicalMinCover(const CirculantInstance& inst, int i);

// All minimal covers in lexicographic order.
std::vector<IndexSet> EnumerateMinimalCovers(const CirculantInstance& inst,
                                             const Limits& limits = {});

// C_n^k / N: drop columns in N, then dominating rows.
BinaryMatrix Contract(const CirculantInstance& inst, const IndexSet& contracted);

// Smallest cover size by exhaustive search over subsets of growing size.
int BruteForceTau(const CirculantInstance& inst, const Limits& limits = {});

// Sets W with |W ∩ x^j| = 1 for every j in Z_k, on an instance with k | n.
// Visits all s^k of them; offsets t_j in [0, s) run as an odometer with
// t_{k-1} fastest. The callback may return false to stop early.
std::uint64_t TransversalCount(const CirculantInstance& inst);
void ForEachTransversal(const CirculantInstance& inst,
                        const std::function<bool(const IndexSet&)>& visit);

// True when W picks exactly one element from each x^j, j in Z_k.
bool IsTransversal(const CirculantInstance& inst, const IndexSet& w);

void CheckEnumerationBound(const CirculantInstance& inst, const Limits& limits);

}  // namespace circ

#endif  // CIRC_CORE_H_
