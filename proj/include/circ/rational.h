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

#ifndef CIRC_RATIONAL_H_
#define CIRC_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circ {

// Arbitrary precision rational, always kept in lowest terms.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text or q = 0.
Rational ParseRational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string FormatRational(const Rational& value);

bool IsInteger(const Rational& value);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace circ

#endif  // CIRC_RATIONAL_H_
