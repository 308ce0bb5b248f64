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

#include "circ/minors.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace circ {

std::vector<Arc> GraphArcs(const CirculantInstance& inst) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    arcs.push_back({i, Mod(i + inst.k(), inst.n()), inst.k()});
    arcs.push_back({i, Mod(i + inst.k() + 1, inst.n()), inst.k() + 1});
  }
  return arcs;
}

DicycleParams ComputeDicycleParams(const Dicycle& cycle,
                                   const CirculantInstance& inst) {
  const int n = inst.n();
  const int k = inst.k();
  const std::size_t len = cycle.nodes.size();
  if (len == 0 || cycle.arc_lengths.size() != len) {
    throw InvalidInput("dicycle: node and arc counts differ or are zero");
  }
  IndexSet seen(n);
  DicycleParams p{0, 0, 0};
  long long total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int v = cycle.nodes[i];
    const int step = cycle.arc_lengths[i];
    if (v < 0 || v >= n) throw InvalidInput("dicycle: node out of range");
    if (seen.contains(v)) throw InvalidInput("dicycle: repeated node");
    seen.insert(v);
    if (step == k) {
      ++p.n2;
    } else if (step == k + 1) {
      ++p.n3;
    } else {
      throw InvalidInput("dicycle: arc length " + std::to_string(step) +
                         " is neither k nor k+1");
    }
    if (Mod(v + step, n) != cycle.nodes[(i + 1) % len]) {
      throw InvalidInput("dicycle: arc does not reach the next node");
    }
    total += step;
  }
  if (total % n != 0) {
    throw InvalidInput("dicycle: total length not a multiple of n");
  }
  p.n1 = static_cast<int>(total / n);
  return p;
}

TransversalConstruction BuildTransversalMinor(const CirculantInstance& inst,
                                              const IndexSet& w) {
  const int s = inst.s();
  const int k = inst.k();
  const int n = inst.n();
  if (w.universe() != n || !IsTransversal(inst, w)) {
    throw InvalidInput("W = " + w.ToString() +
                       " must meet every minimum cover x^j exactly once");
  }
  const IndexSet w_bar = w.complement();
  for (int j = 0; j < n; ++j) {
    if (!w_bar.intersects(RowSupport(inst, j))) {
      throw InvalidInput("complement of W misses row " + std::to_string(j));
    }
  }

  TransversalConstruction out;
  out.heads.resize(k);
  out.offsets.resize(k);
  for (int j = 0; j < k; ++j) {
    out.heads[j] = (w & CanonicalMinCover(inst, j)).front();
    out.offsets[j] = (out.heads[j] - j) / k;
  }
  const auto& t = out.offsets;
  out.short_arcs.resize(k);
  for (int j = 0; j + 1 < k; ++j) {
    const int diff = t[j] - t[j + 1];
    out.short_arcs[j] = diff >= 0 ? (s - 1) - diff : (t[j + 1] - t[j]) - 1;
  }
  {
    const int diff = t[k - 1] - t[0];
    int last;
    if (diff <= -2) {
      last = t[0] - t[k - 1] - 2;
    } else if (diff <= s - 2) {
      last = (s - 2) - diff;
    } else {
      last = s - 1;
    }
    out.short_arcs[k - 1] = last;
  }

  Dicycle cycle;
  IndexSet contracted(n);
  for (int j = 0; j < k; ++j) {
    IndexSet block(n);
    int node = out.heads[j];
    for (int r = 0; r <= out.short_arcs[j]; ++r) {
      node = Mod(out.heads[j] + static_cast<long long>(r) * k, n);
      if (contracted.contains(node) || block.contains(node)) {
        throw InvariantViolation("transversal construction: blocks overlap");
      }
      block.insert(node);
      cycle.nodes.push_back(node);
      cycle.arc_lengths.push_back(r < out.short_arcs[j] ? k : k + 1);
    }
    if (Mod(node + k + 1, n) != out.heads[(j + 1) % k]) {
      throw InvariantViolation("transversal construction: path P_" +
                               std::to_string(j) + " misses i_" +
                               std::to_string((j + 1) % k));
    }
    contracted = contracted | block;
    out.blocks.push_back(std::move(block));
  }

  const DicycleParams p = ComputeDicycleParams(cycle, inst);
  if (p.n1 >= k) {
    throw InvariantViolation("transversal construction produced n1 >= k");
  }
  MinorCert& cert = out.cert;
  cert.n = n;
  cert.k = k;
  cert.w = IndexSet(n, out.heads);
  cert.contracted = contracted;
  cert.d = 1;
  cert.n1 = p.n1;
  cert.n2 = p.n2;
  cert.n3 = p.n3;
  cert.n_prime = n - contracted.size();
  cert.k_prime = k - p.n1;
  cert.cycles.push_back(std::move(cycle));
  return out;
}

MinorCert CertFromWPartition(const CirculantInstance& inst, const IndexSet& w) {
  return BuildTransversalMinor(inst, w).cert;
}

namespace {

// Enumerates cycle covers of the subgraph of G(C_n^k) on node set N, i.e.
// perfect matchings between N (tails) and N (heads). Every node has at most
// two candidate heads and two candidate tails, so after forced assignments
// only disjoint even cycles remain and branching stays small.
class CycleCoverSearch {
 public:
  CycleCoverSearch(const CirculantInstance& inst, const IndexSet& nodes)
      : n_(inst.n()), k_(inst.k()), nodes_(nodes) {}

  // Calls visit(successor) for each cover; stops when visit returns true.
  bool Run(const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> succ(n_, -1);
    std::vector<int> pred(n_, -1);
    return Search(succ, pred, visit);
  }

 private:
  std::vector<int> Heads(int v) const {
    std::vector<int> out;
    for (int step : {k_, k_ + 1}) {
      const int h = Mod(v + step, n_);
      if (nodes_.contains(h)) out.push_back(h);
    }
    return out;
  }
  std::vector<int> Tails(int v) const {
    std::vector<int> out;
    for (int step : {k_, k_ + 1}) {
      const int t = Mod(v - step, n_);
      if (nodes_.contains(t)) out.push_back(t);
    }
    return out;
  }

  // Returns false on contradiction.
  bool Propagate(std::vector<int>& succ, std::vector<int>& pred) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v : nodes_.members()) {
        if (succ[v] < 0) {
          int options = 0, only = -1;
          for (int h : Heads(v)) {
            if (pred[h] < 0) ++options, only = h;
          }
          if (options == 0) return false;
          if (options == 1) {
            succ[v] = only;
            pred[only] = v;
            changed = true;
          }
        }
        if (pred[v] < 0) {
          int options = 0, only = -1;
          for (int t : Tails(v)) {
            if (succ[t] < 0) ++options, only = t;
          }
          if (options == 0) return false;
          if (options == 1) {
            succ[only] = v;
            pred[v] = only;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  bool Search(std::vector<int> succ, std::vector<int> pred,
              const std::function<bool(const std::vector<int>&)>& visit) {
    if (!Propagate(succ, pred)) return false;
    for (int v : nodes_.members()) {
      if (succ[v] >= 0) continue;
      for (int h : Heads(v)) {
        if (pred[h] >= 0) continue;
        auto s2 = succ;
        auto p2 = pred;
        s2[v] = h;
        p2[h] = v;
        if (Search(std::move(s2), std::move(p2), visit)) return true;
      }
      return false;
    }
    return visit(succ);
  }

  int n_;
  int k_;
  const IndexSet& nodes_;
};

}  // namespace

bool ValidateCert(const MinorCert& cert) {
  if (cert.k < 2 || cert.k > cert.n - 1) return false;
  const CirculantInstance inst(cert.n, cert.k);
  const int n = cert.n;
  const int k = cert.k;
  if (cert.w.universe() != n || cert.contracted.universe() != n) return false;
  if (cert.d < 1 || cert.n1 < 1 || cert.n2 < 0 || cert.n3 < 0) return false;
  const int size_n = cert.contracted.size();
  if (size_n < 1 || size_n > n - 2) return false;
  if (size_n != cert.d * (cert.n2 + cert.n3)) return false;
  if (cert.n_prime != n - size_n || cert.n_prime < 1) return false;
  if (cert.k_prime != k - cert.d * cert.n1 || cert.k_prime < 1) return false;
  if (static_cast<long long>(cert.n1) * n !=
      static_cast<long long>(k) * cert.n2 +
          static_cast<long long>(k + 1) * cert.n3) {
    return false;
  }
  if (cert.w.size() != cert.d * cert.n3) return false;
  if (!cert.w.is_subset_of(cert.contracted)) return false;

  const DicycleParams want{cert.n1, cert.n2, cert.n3};
  CycleCoverSearch search(inst, cert.contracted);
  return search.Run([&](const std::vector<int>& succ) {
    IndexSet visited(n);
    IndexSet long_heads(n);
    int cycles = 0;
    for (int start : cert.contracted.members()) {
      if (visited.contains(start)) continue;
      Dicycle cycle;
      int v = start;
      do {
        visited.insert(v);
        cycle.nodes.push_back(v);
        const int step = Mod(succ[v] - v, n);
        cycle.arc_lengths.push_back(step);
        if (step == k + 1) long_heads.insert(succ[v]);
        v = succ[v];
      } while (v != start);
      ++cycles;
      if (ComputeDicycleParams(cycle, inst) != want) return false;
    }
    return cycles == cert.d && long_heads == cert.w;
  });
}

std::pair<int, int> ContractionIsCirculant(const MinorCert& cert) {
  if (!ValidateCert(cert)) {
    throw InvalidInput("ContractionIsCirculant: certificate is not valid");
  }
  const BinaryMatrix minor = Contract(cert.instance(), cert.contracted);
  const int np = cert.n_prime;
  const int kp = cert.k_prime;
  auto fail = [&](const std::string& why) {
    return IsomorphismFailure("C_" + std::to_string(cert.n) + "^" +
                              std::to_string(cert.k) + " / N is not C_" +
                              std::to_string(np) + "^" + std::to_string(kp) +
                              ": " + why);
  };
  if (minor.num_cols() != np) throw fail("column count differs");
  if (minor.num_rows() != np) throw fail("row count differs");
  if (kp >= np) throw fail("k' must be below n'");
  IndexSet starts(np);
  for (const IndexSet& row : minor.rows()) {
    if (row.size() != kp) throw fail("row of wrong size " + row.ToString());
    int start = -1;
    for (int c : row.members()) {
      if (!row.contains(Mod(c - 1, np))) start = c;
    }
    if (start < 0 || row != IndexSet::ClosedOpen(np, start, Mod(start + kp, np))) {
      throw fail("row is not a cyclic interval " + row.ToString());
    }
    if (starts.contains(start)) throw fail("repeated row shift");
    starts.insert(start);
  }
  return {np, kp};
}

std::optional<EmbeddingWitness> EmbeddableInSk(int n_prime, int k_prime) {
  if (n_prime < 1 || k_prime < 1) {
    throw InvalidInput("EmbeddableInSk: n' and k' must be positive");
  }
  const int h = n_prime / k_prime;
  const int r = n_prime % k_prime;
  if (r == 0) {
    throw InvalidInput("EmbeddableInSk: n' is a multiple of k'");
  }
  if (r > h - 1) return std::nullopt;
  const int k = (n_prime + (h - r) - 1) / (h - r);
  return EmbeddingWitness{h, k};
}

std::optional<MinorCert> FindTransversalMinor(const CirculantInstance& inst,
                                              int n_prime, int k_prime,
                                              const Limits& limits) {
  if (TransversalCount(inst) > static_cast<std::uint64_t>(limits.max_candidates)) {
    throw BoundExceeded("transversal count exceeds candidate bound");
  }
  std::optional<MinorCert> found;
  const int n = inst.n();
  ForEachTransversal(inst, [&](const IndexSet& w) {
    const IndexSet w_bar = w.complement();
    for (int j = 0; j < n; ++j) {
      if (!w_bar.intersects(RowSupport(inst, j))) return true;
    }
    MinorCert cert = CertFromWPartition(inst, w);
    if (cert.n_prime == n_prime && cert.k_prime == k_prime) {
      found = std::move(cert);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace circ
