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

#ifndef CIRC_INDEX_SET_H_
#define CIRC_INDEX_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace circ {

// A subset of Z_n stored as a bit vector over a fixed universe.
//
// Cyclic intervals follow the convention [a,a)_n = {} and [a,a]_n = {a};
// the remaining forms are derived from [a,b)_n by shifting endpoints, so
// (a,a]_n and (a,a)_n are empty as well.
//
// Ordering compares sorted member lists lexicographically, which is the
// tie-break order used throughout the library.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe);
  IndexSet(int universe, std::span<const int> members);
  IndexSet(int universe, std::initializer_list<int> members);

  static IndexSet Full(int universe);
  // [a, b)_n
  static IndexSet ClosedOpen(int universe, int a, int b);
  // [a, b]_n
  static IndexSet Closed(int universe, int a, int b);
  // (a, b]_n
  static IndexSet OpenClosed(int universe, int a, int b);
  // (a, b)_n
  static IndexSet Open(int universe, int a, int b);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(int i) const;

  void insert(int i);
  void erase(int i);

  std::vector<int> members() const;
  // Smallest member, or -1 when empty.
  int front() const;

  IndexSet complement() const;
  IndexSet operator&(const IndexSet& other) const;
  IndexSet operator|(const IndexSet& other) const;
  // Set difference.
  IndexSet operator-(const IndexSet& other) const;
  int intersection_size(const IndexSet& other) const;
  bool intersects(const IndexSet& other) const;
  bool is_subset_of(const IndexSet& other) const;

  std::vector<std::uint8_t> indicator() const;
  std::string ToString() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator<(const IndexSet& a, const IndexSet& b);

 private:
  void CheckIndex(int i) const;
  void CheckSameUniverse(const IndexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Non-negative residue of a modulo n.
inline int Mod(long long a, int n) {
  const long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace circ

#endif  // CIRC_INDEX_SET_H_
