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

#ifndef CIRC_TESTS_ORACLES_H_
#define CIRC_TESTS_ORACLES_H_

// Independent reference computations used only by tests. Nothing here calls
// into the routines it is used to check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "circ/rational.h"

namespace circ::oracle {

// Row i of C_n^k as a bitmask, by direct modular scan.
inline std::uint64_t RowMask(int n, int k, int i) {
  std::uint64_t m = 0;
  for (int j = 0; j < k; ++j) m |= std::uint64_t{1} << ((i + j) % n);
  return m;
}

inline bool CoversAll(int n, int k, std::uint64_t s) {
  for (int i = 0; i < n; ++i) {
    if ((RowMask(n, k, i) & s) == 0) return false;
  }
  return true;
}

// Minimal covers by scanning all 2^n subsets; sorted member lists in
// lexicographic order.
inline std::vector<std::vector<int>> MinimalCoversBySubsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (!CoversAll(n, k, s)) continue;
    bool minimal = true;
    for (int e = 0; e < n && minimal; ++e) {
      if ((s >> e) & 1U) minimal = !CoversAll(n, k, s & ~(std::uint64_t{1} << e));
    }
    if (!minimal) continue;
    std::vector<int> members;
    for (int e = 0; e < n; ++e) {
      if ((s >> e) & 1U) members.push_back(e);
    }
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int MinCoverSizeBySubsets(int n, int k) {
  int best = n;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int size = __builtin_popcountll(s);
    if (size < best && CoversAll(n, k, s)) best = size;
  }
  return best;
}

// k'/k <= n'/n <= (k'+1)/(k+1), by cross multiplication.
inline bool MinorCondition(long long n, long long k, long long np,
                           long long kp) {
  return kp * n <= np * k && np * (k + 1) <= (kp + 1) * n;
}

// Some (s, k) with s >= 2, 2 <= k, for which C_{sk}^k satisfies the minor
// condition for (n', k'), found by scanning k up to a generous bound.
inline bool ExistsSkHost(int np, int kp) {
  for (int s = 2; s <= np; ++s) {
    for (int k = 2; k <= 4 * np + 10; ++k) {
      const long long n = static_cast<long long>(s) * k;
      if (np < n && MinorCondition(n, k, np, kp)) return true;
    }
  }
  return false;
}

// n_2^j from the congruence i_j + n_2^j k + (k+1) = i_{j+1} (mod sk), with
// 0 <= n_2^j <= s-1. Here heads[j] = j + offsets[j] k.
inline std::vector<int> ShortArcsByCongruence(int s, int k,
                                              const std::vector<int>& heads) {
  const int n = s * k;
  std::vector<int> out(k, -1);
  for (int j = 0; j < k; ++j) {
    for (int r = 0; r < s; ++r) {
      if ((heads[j] + r * k + k + 1) % n == heads[(j + 1) % k]) out[j] = r;
    }
  }
  return out;
}

}  // namespace circ::oracle

#endif  // CIRC_TESTS_ORACLES_H_
