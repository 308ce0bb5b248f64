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

#include "circ/inequalities.h"

#include <algorithm>
#include <string>

namespace circ {
namespace {

LinearInequality Blank(int n, InequalityKind kind) {
  LinearInequality ineq;
  ineq.coeffs.assign(n, Rational(0));
  ineq.rhs = 0;
  ineq.kind = kind;
  return ineq;
}

long long CeilDiv(long long a, long long b) { return (a + b - 1) / b; }

// Covers of size <= max_size, by combinations; nullopt when the number of
// candidates would exceed the bound.
std::optional<std::vector<IndexSet>> SmallCovers(const CirculantInstance& inst,
                                                 int max_size,
                                                 long long max_candidates) {
  const int n = inst.n();
  long double total = 0;
  long double binom = 1;
  for (int size = 1; size <= max_size && size <= n; ++size) {
    binom = binom * (n - size + 1) / size;
    total += binom;
  }
  if (total > static_cast<long double>(max_candidates)) return std::nullopt;
  std::vector<IndexSet> out;
  for (int size = 1; size <= max_size && size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      IndexSet s(n, pick);
      if (IsCover(inst, s)) out.push_back(std::move(s));
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int j = pos + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

std::vector<LinearInequality> BooleanFacets(const CirculantInstance& inst) {
  const int n = inst.n();
  std::vector<LinearInequality> out;
  out.reserve(3 * n);
  for (int i = 0; i < n; ++i) {
    auto lower = Blank(n, InequalityKind::kBooleanLower);
    lower.coeffs[i] = 1;
    out.push_back(std::move(lower));
  }
  for (int i = 0; i < n; ++i) {
    auto upper = Blank(n, InequalityKind::kBooleanUpper);
    upper.coeffs[i] = -1;
    upper.rhs = -1;
    out.push_back(std::move(upper));
  }
  for (int i = 0; i < n; ++i) {
    auto row = Blank(n, InequalityKind::kRowCover);
    for (int j : RowSupport(inst, i).members()) row.coeffs[j] = 1;
    row.rhs = 1;
    out.push_back(std::move(row));
  }
  return out;
}

LinearInequality RankInequality(const CirculantInstance& inst) {
  auto rank = Blank(inst.n(), InequalityKind::kRank);
  std::fill(rank.coeffs.begin(), rank.coeffs.end(), Rational(1));
  rank.rhs = inst.tau();
  return rank;
}

LinearInequality MinorInequality(const MinorCert& cert) {
  if (!ValidateCert(cert)) {
    throw InvalidInput("minor inequality requested for an invalid certificate");
  }
  auto ineq = Blank(cert.n, InequalityKind::kMinor);
  for (int i = 0; i < cert.n; ++i) ineq.coeffs[i] = cert.w.contains(i) ? 2 : 1;
  ineq.rhs = static_cast<long>(CeilDiv(cert.n_prime, cert.k_prime));
  ineq.cert = cert;
  return ineq;
}

MinorClass ClassifyMinor(const MinorCert& cert) {
  const long long minor_rhs = CeilDiv(cert.n_prime, cert.k_prime);
  const long long rank_rhs = CeilDiv(cert.n, cert.k);
  MinorClass c;
  c.relevant = cert.n_prime % cert.k_prime != 0 && minor_rhs > rank_rhs;
  c.conjecture_form = cert.n_prime % cert.k_prime == 1 % cert.k_prime;
  c.rank_dominated = minor_rhs == rank_rhs;
  return c;
}

ValidityResult CheckValidity(const CirculantInstance& inst,
                             const LinearInequality& ineq,
                             const Limits& limits) {
  return CheckValidity(inst, ineq, EnumerateMinimalCovers(inst, limits));
}

ValidityResult CheckValidity(const CirculantInstance& inst,
                             const LinearInequality& ineq,
                             const std::vector<IndexSet>& minimal_covers) {
  if (ineq.dimension() != inst.n()) {
    throw InvalidInput("inequality dimension differs from n");
  }
  IndexSet negative(inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    if (ineq.coeffs[i] < 0) negative.insert(i);
  }
  for (const IndexSet& cover : minimal_covers) {
    const IndexSet probe = cover | negative;
    if (!ineq.IsSatisfiedBy(probe)) return {false, probe};
  }
  return {true, std::nullopt};
}

int AffineRank(const std::vector<IndexSet>& points) {
  if (points.empty()) return -1;
  const int n = points.front().universe();
  const auto base = points.front().indicator();
  // Echelon rows keyed by pivot column.
  std::vector<RationalVector> basis;
  std::vector<int> pivots;
  for (std::size_t p = 1; p < points.size(); ++p) {
    if (static_cast<int>(basis.size()) == n) break;
    const auto ind = points[p].indicator();
    RationalVector v(n);
    for (int i = 0; i < n; ++i) v[i] = int(ind[i]) - int(base[i]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int col = pivots[b];
      if (v[col] == 0) continue;
      const Rational factor = v[col] / basis[b][col];
      for (int i = 0; i < n; ++i) {
        if (basis[b][i] != 0) v[i] -= factor * basis[b][i];
      }
    }
    const auto it = std::find_if(v.begin(), v.end(),
                                 [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<int>(it - v.begin()));
    basis.push_back(std::move(v));
  }
  return static_cast<int>(basis.size());
}

FacetReport MakeFacetReport(const CirculantInstance& inst,
                            const LinearInequality& ineq, const Limits& limits) {
  return MakeFacetReport(inst, ineq, EnumerateMinimalCovers(inst, limits),
                         limits);
}

FacetReport MakeFacetReport(const CirculantInstance& inst,
                            const LinearInequality& ineq,
                            const std::vector<IndexSet>& minimal_covers,
                            const Limits& limits) {
  FacetReport report;
  report.valid = CheckValidity(inst, ineq, minimal_covers).valid;
  if (!report.valid) return report;

  for (const IndexSet& cover : minimal_covers) {
    if (ineq.IsTightAt(cover)) report.roots.push_back(cover);
  }
  if (auto small = SmallCovers(inst, inst.tau() + 2, limits.max_candidates)) {
    for (IndexSet& cover : *small) {
      if (ineq.IsTightAt(cover)) report.roots.push_back(std::move(cover));
    }
  }
  std::sort(report.roots.begin(), report.roots.end());
  report.roots.erase(std::unique(report.roots.begin(), report.roots.end()),
                     report.roots.end());
  report.affine_rank = AffineRank(report.roots);
  report.is_facet = report.affine_rank == inst.n() - 1;

  const bool positive = std::all_of(ineq.coeffs.begin(), ineq.coeffs.end(),
                                    [](const Rational& c) { return c > 0; });
  const bool uniform = std::all_of(
      ineq.coeffs.begin(), ineq.coeffs.end(),
      [&](const Rational& c) { return c == ineq.coeffs.front(); });
  if (positive && !uniform) {
    report.structural_checks = StructuralBattery(inst, ineq);
  }
  return report;
}

std::map<std::string, bool> StructuralBattery(const CirculantInstance& inst,
                                              const LinearInequality& ineq) {
  if (ineq.dimension() != inst.n()) {
    throw InvalidInput("inequality dimension differs from n");
  }
  const LinearInequality canon = ineq.Canonical();
  const int n = inst.n();
  const Rational a0 = *std::min_element(canon.coeffs.begin(), canon.coeffs.end());
  if (a0 <= 0) {
    throw InvalidInput("structural battery needs positive coefficients");
  }
  IndexSet w(n);
  for (int i = 0; i < n; ++i) {
    if (canon.coeffs[i] > a0) w.insert(i);
  }
  if (w.empty()) {
    throw InvalidInput("structural battery does not apply to rank-like inequalities");
  }
  const IndexSet w_bar = w.complement();

  std::map<std::string, bool> checks;
  checks["rhs_at_least_a0_tau_plus_1"] = canon.rhs >= a0 * (inst.tau() + 1);

  bool meets = true;
  for (int i = 0; i < n && meets; ++i) {
    meets = CanonicalMinCover(inst, i).intersects(w);
  }
  checks["min_covers_meet_W"] = meets;

  bool twice = true;
  for (int i = 0; i < n && twice; ++i) {
    twice = RowSupport(inst, i).intersection_size(w_bar) >= 2;
  }
  checks["rows_meet_complement_twice"] = twice;

  bool bounded = true;
  bool doubled = true;
  for (int i : w.members()) {
    bounded = bounded && canon.coeffs[i] <= 2 * a0;
    doubled = doubled && canon.coeffs[i] == 2 * a0;
  }
  checks["W_coeffs_at_most_2a0"] = bounded;

  if (inst.k_divides_n() && canon.rhs == a0 * (inst.s() + 1)) {
    checks["W_is_transversal"] = IsTransversal(inst, w);
    checks["W_size_is_k"] = w.size() == inst.k();
    checks["W_coeffs_equal_2a0"] = doubled;
  }
  return checks;
}

}  // namespace circ
