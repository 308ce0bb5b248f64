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

#ifndef CIRC_JSON_IO_H_
#define CIRC_JSON_IO_H_

#include <vector>

#include "json.hpp"

#include "circ/core.h"
#include "circ/inequalities.h"
#include "circ/linear_inequality.h"
#include "circ/minors.h"
#include "circ/rational.h"
#include "circ/separation.h"
#include "circ/solver.h"

namespace circ {

using Json = nlohmann::json;

// All readers throw InvalidInput on schema violations.

Json ToJson(const CirculantInstance& inst);
CirculantInstance InstanceFromJson(const Json& j);

Json ToJson(const IndexSet& s);
IndexSet IndexSetFromJson(const Json& j, int universe);

Json ToJson(const Rational& r);
Rational RationalFromJson(const Json& j);
Json ToJson(const RationalVector& v);
RationalVector RationalVectorFromJson(const Json& j);

// {"n","k","W","N","d","n1","n2","n3","nPrime","kPrime"}
Json ToJson(const MinorCert& cert);
MinorCert CertFromJson(const Json& j);

// {"coeffs":["p/q",...],"rhs":"p/q","kind":"...","cert":{...}?}
Json ToJson(const LinearInequality& ineq);
LinearInequality InequalityFromJson(const Json& j);

Json ToJson(const SeparationOutcome& outcome);
SeparationOutcome SeparationOutcomeFromJson(const Json& j, int universe);

Json ToJson(const FacetReport& report);
Json ToJson(const SolveResult& result);
Json ToJson(const S1Entry& entry);
Json ToJson(const ConjectureReport& report);

}  // namespace circ

#endif  // CIRC_JSON_IO_H_
