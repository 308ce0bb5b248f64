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

#include "circ/separation.h"

#include <string>

#include "circ/minors.h"

namespace circ {
namespace {

void CheckDimension(const CirculantInstance& inst,
                    std::span<const Rational> x_hat) {
  if (static_cast<int>(x_hat.size()) != inst.n()) {
    throw InvalidInput("point has dimension " + std::to_string(x_hat.size()) +
                       ", expected " + std::to_string(inst.n()));
  }
}

Rational Threshold(const CirculantInstance& inst,
                   std::span<const Rational> x_hat) {
  Rational total = 0;
  for (const auto& v : x_hat) total += v;
  return Rational(inst.s() + 1) - total;
}

// Best partial path into a node: cost first, then the lexicographically
// smaller chosen set. Both keys are additive over disjoint layers, so the
// order is preserved when extending by the same suffix.
struct Label {
  Rational cost;
  IndexSet chosen;
};

bool Better(const Label& a, const Label& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.chosen < b.chosen;
}

}  // namespace

SeparationDigraph::SeparationDigraph(const CirculantInstance& inst)
    : s_(inst.s()), k_(inst.k()) {
  for (int j = 0; j < k_; ++j) {
    std::vector<int> layer;
    for (int r = 0; r < s_; ++r) layer.push_back(j + r * k_);
    layers_.push_back(std::move(layer));
  }
}

std::vector<SeparationDigraph::Arc> SeparationDigraph::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(num_arcs());
  for (int m : layers_.front()) arcs.push_back({source(), m});
  for (int j = 0; j + 1 < k_; ++j) {
    for (int l : layers_[j]) {
      for (int m : layers_[j + 1]) arcs.push_back({l, m});
    }
  }
  for (int l : layers_.back()) arcs.push_back({l, sink()});
  return arcs;
}

Rational SeparationDigraph::ArcLength(const Arc& arc,
                                      std::span<const Rational> x_hat) const {
  if (arc.head == sink()) return 0;
  return x_hat[arc.head];
}

SeparationOutcome Separate(const CirculantInstance& inst,
                           std::span<const Rational> x_hat) {
  const SeparationDigraph graph(inst);
  CheckDimension(inst, x_hat);
  const int n = inst.n();

  std::vector<Label> frontier;
  for (int m : graph.layers().front()) {
    Label label{x_hat[m], IndexSet(n)};
    label.chosen.insert(m);
    frontier.push_back(std::move(label));
  }
  for (int j = 1; j < graph.k(); ++j) {
    std::vector<Label> next;
    for (int m : graph.layers()[j]) {
      const Label* best = nullptr;
      for (const Label& prev : frontier) {
        if (best == nullptr || Better(prev, *best)) best = &prev;
      }
      Label label{best->cost + x_hat[m], best->chosen};
      label.chosen.insert(m);
      next.push_back(std::move(label));
    }
    frontier = std::move(next);
  }
  const Label* best = nullptr;
  for (const Label& l : frontier) {
    if (best == nullptr || Better(l, *best)) best = &l;
  }

  SeparationOutcome out;
  out.w = best->chosen;
  out.path_cost = best->cost;
  out.threshold = Threshold(inst, x_hat);
  out.violated = out.path_cost < out.threshold;
  return out;
}

SeparationOutcome BruteForceSeparate(const CirculantInstance& inst,
                                     std::span<const Rational> x_hat,
                                     const Limits& limits) {
  CheckDimension(inst, x_hat);
  if (TransversalCount(inst) > static_cast<std::uint64_t>(limits.max_candidates)) {
    throw BoundExceeded("s^k exceeds the candidate bound");
  }
  std::optional<Label> best;
  ForEachTransversal(inst, [&](const IndexSet& w) {
    Label label{0, w};
    for (int i : w.members()) label.cost += x_hat[i];
    if (!best || Better(label, *best)) best = std::move(label);
    return true;
  });
  SeparationOutcome out;
  out.w = best->chosen;
  out.path_cost = best->cost;
  out.threshold = Threshold(inst, x_hat);
  out.violated = out.path_cost < out.threshold;
  return out;
}

bool IsCompositeTransversal(const CirculantInstance& inst, const IndexSet& w) {
  for (int j = 0; j < inst.n(); ++j) {
    if (RowSupport(inst, j).is_subset_of(w)) return true;
  }
  return false;
}

LinearInequality TransversalInequality(const CirculantInstance& inst,
                                       const IndexSet& w) {
  if (!IsTransversal(inst, w)) {
    throw InvalidInput("W = " + w.ToString() + " is not a transversal");
  }
  LinearInequality ineq;
  ineq.coeffs.resize(inst.n());
  for (int i = 0; i < inst.n(); ++i) ineq.coeffs[i] = w.contains(i) ? 2 : 1;
  ineq.rhs = inst.s() + 1;
  if (IsCompositeTransversal(inst, w)) {
    ineq.kind = InequalityKind::kGeneric;
  } else {
    ineq.kind = InequalityKind::kMinor;
    ineq.cert = CertFromWPartition(inst, w);
  }
  return ineq;
}

}  // namespace circ
