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

#ifndef CIRC_LINEAR_INEQUALITY_H_
#define CIRC_LINEAR_INEQUALITY_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "circ/index_set.h"
#include "circ/minors.h"
#include "circ/rational.h"

namespace circ {

enum class InequalityKind {
  kBooleanLower,  // x_i >= 0
  kBooleanUpper,  // -x_i >= -1
  kRowCover,      // sum_{j in C^i} x_j >= 1
  kRank,          // sum x_i >= ceil(n/k)
  kMinor,         // 2 on W, 1 elsewhere, rhs ceil(n'/k')
  kGeneric,
};

std::string_view KindName(InequalityKind kind);
// Throws InvalidInput for unknown names.
InequalityKind KindFromName(std::string_view name);

// coeffs . x >= rhs over exact rationals.
struct LinearInequality {
  RationalVector coeffs;
  Rational rhs;
  InequalityKind kind = InequalityKind::kGeneric;
  std::optional<MinorCert> cert;

  int dimension() const { return static_cast<int>(coeffs.size()); }
  Rational Evaluate(std::span<const Rational> x) const;
  // Value at the characteristic vector of s.
  Rational Evaluate(const IndexSet& s) const;
  bool IsSatisfiedBy(std::span<const Rational> x) const;
  bool IsSatisfiedBy(const IndexSet& s) const;
  bool IsTightAt(const IndexSet& s) const;

  // Positive multiple with integer data and gcd 1 over coefficients and rhs.
  LinearInequality Canonical() const;
  // Same hyperplane and direction after canonicalization.
  bool SameAs(const LinearInequality& other) const;
};

}  // namespace circ

#endif  // CIRC_LINEAR_INEQUALITY_H_
