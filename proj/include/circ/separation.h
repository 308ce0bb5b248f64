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

#ifndef CIRC_SEPARATION_H_
#define CIRC_SEPARATION_H_

#include <optional>
#include <span>
#include <vector>

#include "circ/core.h"
#include "circ/linear_inequality.h"
#include "circ/rational.h"

namespace circ {

// Layered acyclic digraph on C_{sk}^k. Layer j holds x^j = {j, j+k, ...,
// j+(s-1)k}; consecutive layers are joined completely, the source feeds
// layer 0 and layer k-1 drains into the sink. Element nodes keep their
// Z_{sk} label; the source is sk and the sink sk+1.
class SeparationDigraph {
 public:
  explicit SeparationDigraph(const CirculantInstance& inst);

  int s() const { return s_; }
  int k() const { return k_; }
  int source() const { return s_ * k_; }
  int sink() const { return s_ * k_ + 1; }
  int num_nodes() const { return s_ * k_ + 2; }
  int num_arcs() const { return s_ + (k_ - 1) * s_ * s_ + s_; }
  const std::vector<std::vector<int>>& layers() const { return layers_; }

  struct Arc {
    int tail;
    int head;
  };
  std::vector<Arc> Arcs() const;

  // x_hat[head] for element heads, zero into the sink.
  Rational ArcLength(const Arc& arc, std::span<const Rational> x_hat) const;

 private:
  int s_;
  int k_;
  std::vector<std::vector<int>> layers_;
};

struct SeparationOutcome {
  bool violated = false;
  // The minimizing transversal (lexicographically smallest among ties).
  IndexSet w;
  Rational path_cost;
  // L(x_hat) = s + 1 - sum x_hat
  Rational threshold;
};

// Minimizes sum_{i in W} x_hat_i over transversals W by dynamic programming
// over the layers, O(s^2 k) arithmetic operations.
SeparationOutcome Separate(const CirculantInstance& inst,
                           std::span<const Rational> x_hat);

// Same answer by scanning all s^k transversals.
SeparationOutcome BruteForceSeparate(const CirculantInstance& inst,
                                     std::span<const Rational> x_hat,
                                     const Limits& limits = {});

// 2 sum_{i in W} x_i + sum_{i not in W} x_i >= s+1. Tagged kMinor with its
// certificate when the complement of W meets every row, otherwise kGeneric
// (then it is the rank constraint plus a row cover).
LinearInequality TransversalInequality(const CirculantInstance& inst,
                                       const IndexSet& w);

// True when some row C^j lies inside W.
bool IsCompositeTransversal(const CirculantInstance& inst, const IndexSet& w);

}  // namespace circ

#endif  // CIRC_SEPARATION_H_
