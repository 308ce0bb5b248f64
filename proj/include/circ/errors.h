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

#ifndef CIRC_ERRORS_H_
#define CIRC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace circ {

// Caller supplied an argument outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run beyond its configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical invariant that must hold did not. Always a bug or a
// counterexample worth reporting.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Contraction by a certificate's N did not produce the promised circulant.
class IsomorphismFailure : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

// Enumeration limits shared by all exhaustive routines.
struct Limits {
  int max_n = 36;
  long long max_candidates = 1'000'000;
};

}  // namespace circ

#endif  // CIRC_ERRORS_H_
