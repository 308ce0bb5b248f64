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

#include "circ/core.h"

#include <algorithm>
#include <limits>
#include <string>

namespace circ {

CirculantInstance::CirculantInstance(int n, int k) : n_(n), k_(k) {
  if (k < 2 || k > n - 1) {
    throw InvalidInput("circulant C_" + std::to_string(n) + "^" +
                       std::to_string(k) + " requires 2 <= k <= n-1");
  }
}

int CirculantInstance::s() const {
  if (!k_divides_n()) {
    throw InvalidInput("n = " + std::to_string(n_) +
                       " is not a multiple of k = " + std::to_string(k_));
  }
  return n_ / k_;
}

BinaryMatrix::BinaryMatrix(int num_cols, std::vector<IndexSet> rows,
                           std::vector<int> row_labels,
                           std::vector<int> column_labels) {
  if (rows.size() != row_labels.size() ||
      static_cast<int>(column_labels.size()) != num_cols) {
    throw InvalidInput("BinaryMatrix: label count mismatch");
  }
  // A row goes if some other row is a proper subset, or an identical row
  // appears earlier.
  std::vector<bool> keep(rows.size(), true);
  for (std::size_t v = 0; v < rows.size(); ++v) {
    for (std::size_t u = 0; u < rows.size() && keep[v]; ++u) {
      if (u == v || !rows[u].is_subset_of(rows[v])) continue;
      if (rows[u] != rows[v] || u < v) keep[v] = false;
    }
  }
  std::vector<IndexSet> kept_rows;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    if (keep[v]) {
      kept_rows.push_back(rows[v]);
      row_labels_.push_back(row_labels[v]);
    }
  }

  IndexSet used(num_cols);
  for (const auto& r : kept_rows) used = used | r;
  std::vector<int> new_index(num_cols, -1);
  for (int c = 0; c < num_cols; ++c) {
    if (used.contains(c)) {
      new_index[c] = static_cast<int>(column_labels_.size());
      column_labels_.push_back(column_labels[c]);
    }
  }
  num_cols_ = static_cast<int>(column_labels_.size());
  for (const auto& r : kept_rows) {
    IndexSet remapped(num_cols_);
    for (int c : r.members()) remapped.insert(new_index[c]);
    rows_.push_back(std::move(remapped));
  }
}

IndexSet RowSupport(const CirculantInstance& inst, int i) {
  if (i < 0 || i >= inst.n()) {
    throw InvalidInput("row index " + std::to_string(i) + " out of range");
  }
  return IndexSet::ClosedOpen(inst.n(), i, Mod(i + inst.k(), inst.n()));
}

bool IsCover(const CirculantInstance& inst, const IndexSet& s) {
  if (s.universe() != inst.n()) throw InvalidInput("IsCover: universe mismatch");
  // Every window of k consecutive columns must contain a member, i.e. every
  // cyclic gap between consecutive members is at most k.
  const auto m = s.members();
  if (m.empty()) return false;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i + 1] - m[i] > inst.k()) return false;
  }
  return m.front() + inst.n() - m.back() <= inst.k();
}

bool IsMinimalCover(const CirculantInstance& inst, const IndexSet& s) {
  if (!IsCover(inst, s)) return false;
  IndexSet probe = s;
  for (int i : s.members()) {
    probe.erase(i);
    const bool still_cover = IsCover(inst, probe);
    probe.insert(i);
    if (still_cover) return false;
  }
  for (int i = 0; i < inst.n(); ++i) {
    if (s.intersection_size(RowSupport(inst, i)) > 2) {
      throw InvariantViolation("minimal cover " + s.ToString() +
                               " meets row " + std::to_string(i) +
                               " in more than two columns");
    }
  }
  return true;
}

int CoveringNumber(const CirculantInstance& inst) { return inst.tau(); }

IndexSet CanonicalMinCover(const CirculantInstance& inst, int i) {
  if (i < 0 || i >= inst.n()) {
    throw InvalidInput("cover index " + std::to_string(i) + " out of range");
  }
  IndexSet out(inst.n());
  for (int h = 0; h < inst.tau(); ++h) {
    out.insert(Mod(static_cast<long long>(i) + h * inst.k(), inst.n()));
  }
  return out;
}

void CheckEnumerationBound(const CirculantInstance& inst, const Limits& limits) {
  if (inst.n() > limits.max_n) {
    throw BoundExceeded("n = " + std::to_string(inst.n()) +
                        " exceeds enumeration bound " +
                        std::to_string(limits.max_n));
  }
}

namespace {

// Depth-first walk over sorted member lists. A set is a minimal cover iff
// all cyclic gaps are <= k and every two consecutive gaps sum to > k.
class MinimalCoverWalker {
 public:
  explicit MinimalCoverWalker(const CirculantInstance& inst)
      : n_(inst.n()), k_(inst.k()) {}

  std::vector<IndexSet> Run() {
    for (int first = 0; first < k_ && first < n_; ++first) {
      chosen_.assign(1, first);
      Extend();
    }
    return std::move(found_);
  }

 private:
  void Extend() {
    const int m = static_cast<int>(chosen_.size());
    const int first = chosen_.front();
    const int last = chosen_.back();
    if (m >= 2) {
      const int wrap = first + n_ - last;
      const int g_first = chosen_[1] - first;
      const int g_last = last - chosen_[m - 2];
      if (wrap <= k_ && g_last + wrap > k_ && wrap + g_first > k_) {
        found_.emplace_back(n_, chosen_);
      }
    }
    const int prev_gap = m >= 2 ? last - chosen_[m - 2] : k_ + 1;
    for (int next = last + 1; next <= last + k_ && next < n_; ++next) {
      if (prev_gap + (next - last) <= k_) continue;
      chosen_.push_back(next);
      Extend();
      chosen_.pop_back();
    }
  }

  int n_;
  int k_;
  std::vector<int> chosen_;
  std::vector<IndexSet> found_;
};

}  // namespace

std::vector<IndexSet> EnumerateMinimalCovers(const CirculantInstance& inst,
                                             const Limits& limits) {
  CheckEnumerationBound(inst, limits);
  return MinimalCoverWalker(inst).Run();
}

BinaryMatrix Contract(const CirculantInstance& inst, const IndexSet& contracted) {
  if (contracted.universe() != inst.n()) {
    throw InvalidInput("Contract: universe mismatch");
  }
  if (contracted.empty() || contracted.size() > inst.n() - 2) {
    throw InvalidInput("Contract: need 1 <= |N| <= n-2, got |N| = " +
                       std::to_string(contracted.size()));
  }
  std::vector<int> new_index(inst.n(), -1);
  std::vector<int> column_labels;
  for (int c = 0; c < inst.n(); ++c) {
    if (!contracted.contains(c)) {
      new_index[c] = static_cast<int>(column_labels.size());
      column_labels.push_back(c);
    }
  }
  const int cols = static_cast<int>(column_labels.size());
  std::vector<IndexSet> rows;
  std::vector<int> row_labels;
  for (int i = 0; i < inst.n(); ++i) {
    IndexSet row(cols);
    for (int c : RowSupport(inst, i).members()) {
      if (new_index[c] >= 0) row.insert(new_index[c]);
    }
    rows.push_back(std::move(row));
    row_labels.push_back(i);
  }
  return BinaryMatrix(cols, std::move(rows), std::move(row_labels),
                      std::move(column_labels));
}

int BruteForceTau(const CirculantInstance& inst, const Limits& limits) {
  CheckEnumerationBound(inst, limits);
  const int n = inst.n();
  long long examined = 0;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (++examined > limits.max_candidates) {
        throw BoundExceeded("brute-force tau exceeded candidate bound");
      }
      if (IsCover(inst, IndexSet(n, pick))) return size;
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int j = pos + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InvariantViolation("no cover found");
}

std::uint64_t TransversalCount(const CirculantInstance& inst) {
  const int s = inst.s();
  std::uint64_t total = 1;
  for (int j = 0; j < inst.k(); ++j) {
    if (total > std::numeric_limits<std::uint64_t>::max() / s) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= s;
  }
  return total;
}

void ForEachTransversal(const CirculantInstance& inst,
                        const std::function<bool(const IndexSet&)>& visit) {
  const int s = inst.s();
  const int k = inst.k();
  std::vector<int> offsets(k, 0);
  while (true) {
    IndexSet w(inst.n());
    for (int j = 0; j < k; ++j) w.insert(j + offsets[j] * k);
    if (!visit(w)) return;
    int pos = k - 1;
    while (pos >= 0 && offsets[pos] == s - 1) offsets[pos--] = 0;
    if (pos < 0) return;
    ++offsets[pos];
  }
}

bool IsTransversal(const CirculantInstance& inst, const IndexSet& w) {
  if (w.universe() != inst.n() || !inst.k_divides_n()) return false;
  for (int j = 0; j < inst.k(); ++j) {
    if (w.intersection_size(CanonicalMinCover(inst, j)) != 1) return false;
  }
  return true;
}

}  // namespace circ
