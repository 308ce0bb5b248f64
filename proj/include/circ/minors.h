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

#ifndef CIRC_MINORS_H_
#define CIRC_MINORS_H_

#include <optional>
#include <utility>
#include <vector>

#include "circ/core.h"

namespace circ {

// Arc (tail, tail + length) of the digraph G(C_n^k); length is k or k+1.
struct Arc {
  int tail;
  int head;
  int length;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Closed walk in G(C_n^k): arc i leaves nodes[i] with length arc_lengths[i]
// and enters nodes[(i+1) % size].
struct Dicycle {
  std::vector<int> nodes;
  std::vector<int> arc_lengths;
};

struct DicycleParams {
  int n1;  // total length / n
  int n2;  // arcs of length k
  int n3;  // arcs of length k+1
  friend bool operator==(const DicycleParams&, const DicycleParams&) = default;
};

// Certificate that C_n^k / N is isomorphic to C_{n'}^{k'}: N is covered by
// d disjoint simple dicycles of G(C_n^k) sharing parameters (n1, n2, n3),
// and W is the set of heads of the length-(k+1) arcs on those dicycles.
struct MinorCert {
  int n = 0;
  int k = 0;
  IndexSet w;
  IndexSet contracted;  // N
  int d = 0;
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int n_prime = 0;
  int k_prime = 0;
  // Filled by constructions; not part of the serialized certificate.
  std::vector<Dicycle> cycles;

  CirculantInstance instance() const { return CirculantInstance(n, k); }
};

// Intermediate values of the transversal construction, kept for inspection.
struct TransversalConstruction {
  std::vector<int> heads;        // i_j, the element of W in x^j
  std::vector<int> offsets;      // t_j with i_j = j + t_j k
  std::vector<int> short_arcs;   // n_2^j
  std::vector<IndexSet> blocks;  // V_j
  MinorCert cert;
};

// 2n arcs, ordered by tail, length k before k+1.
std::vector<Arc> GraphArcs(const CirculantInstance& inst);

// Throws InvalidInput if the walk is not a simple closed dicycle of G.
DicycleParams ComputeDicycleParams(const Dicycle& cycle,
                                   const CirculantInstance& inst);

// Builds the single-dicycle certificate for a transversal W of the minimum
// covers of C_{sk}^k. Requires |W ∩ x^j| = 1 for j in Z_k and that the
// complement of W meets every row.
TransversalConstruction BuildTransversalMinor(const CirculantInstance& inst,
                                              const IndexSet& w);
MinorCert CertFromWPartition(const CirculantInstance& inst, const IndexSet& w);

bool ValidateCert(const MinorCert& cert);

// Contracts by cert.contracted and checks, in natural column order, that the
// result is exactly C_{n'}^{k'}. Throws IsomorphismFailure otherwise.
std::pair<int, int> ContractionIsCirculant(const MinorCert& cert);

struct EmbeddingWitness {
  int s;
  int k;
};

// For n' = h k' + r with 1 <= r <= k'-1: a witness (s, k) such that C_{sk}^k
// has a minor isomorphic to C_{n'}^{k'}, present iff r <= h-1.
std::optional<EmbeddingWitness> EmbeddableInSk(int n_prime, int k_prime);

// Searches the transversals of C_{sk}^k for a certificate with the given
// minor dimensions.
std::optional<MinorCert> FindTransversalMinor(const CirculantInstance& inst,
                                              int n_prime, int k_prime,
                                              const Limits& limits = {});

}  // namespace circ

#endif  // CIRC_MINORS_H_
