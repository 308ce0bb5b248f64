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

#include "circ/linear_inequality.h"

#include <array>
#include <utility>

#include "circ/errors.h"

namespace circ {
namespace {

constexpr std::array<std::pair<InequalityKind, std::string_view>, 6> kNames{{
    {InequalityKind::kBooleanLower, "boolean-lower"},
    {InequalityKind::kBooleanUpper, "boolean-upper"},
    {InequalityKind::kRowCover, "row-cover"},
    {InequalityKind::kRank, "rank"},
    {InequalityKind::kMinor, "minor"},
    {InequalityKind::kGeneric, "generic"},
}};

}  // namespace

std::string_view KindName(InequalityKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "generic";
}

InequalityKind KindFromName(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw InvalidInput("unknown inequality kind '" + std::string(name) + "'");
}

Rational LinearInequality::Evaluate(std::span<const Rational> x) const {
  return Dot(coeffs, x);
}

Rational LinearInequality::Evaluate(const IndexSet& s) const {
  if (s.universe() != dimension()) {
    throw InvalidInput("inequality: dimension mismatch");
  }
  Rational acc = 0;
  for (int i : s.members()) acc += coeffs[i];
  return acc;
}

bool LinearInequality::IsSatisfiedBy(std::span<const Rational> x) const {
  return Evaluate(x) >= rhs;
}

bool LinearInequality::IsSatisfiedBy(const IndexSet& s) const {
  return Evaluate(s) >= rhs;
}

bool LinearInequality::IsTightAt(const IndexSet& s) const {
  return Evaluate(s) == rhs;
}

LinearInequality LinearInequality::Canonical() const {
  mpz_class lcm = rhs.get_den();
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class gcd = 0;
  auto absorb = [&](const Rational& v) {
    const mpz_class scaled = v.get_num() * (lcm / v.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
  };
  for (const auto& c : coeffs) absorb(c);
  absorb(rhs);
  LinearInequality out = *this;
  if (gcd == 0) return out;
  Rational factor(lcm, gcd);
  factor.canonicalize();
  for (auto& c : out.coeffs) c *= factor;
  out.rhs *= factor;
  return out;
}

bool LinearInequality::SameAs(const LinearInequality& other) const {
  const auto a = Canonical();
  const auto b = other.Canonical();
  return a.coeffs == b.coeffs && a.rhs == b.rhs;
}

}  // namespace circ
