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

#include "circ/index_set.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>

#include "circ/errors.h"

namespace circ {
namespace {

constexpr int kWordBits = 64;

int WordCount(int universe) { return (universe + kWordBits - 1) / kWordBits; }

}  // namespace

IndexSet::IndexSet(int universe) : universe_(universe) {
  if (universe < 0) throw InvalidInput("IndexSet: negative universe");
  words_.assign(WordCount(universe), 0);
}

IndexSet::IndexSet(int universe, std::span<const int> members)
    : IndexSet(universe) {
  for (int i : members) insert(i);
}

IndexSet::IndexSet(int universe, std::initializer_list<int> members)
    : IndexSet(universe, std::span<const int>(members.begin(), members.size())) {}

IndexSet IndexSet::Full(int universe) {
  IndexSet s(universe);
  for (int i = 0; i < universe; ++i) s.insert(i);
  return s;
}

IndexSet IndexSet::ClosedOpen(int universe, int a, int b) {
  IndexSet s(universe);
  if (universe == 0) return s;
  s.CheckIndex(a);
  s.CheckIndex(b);
  for (int i = a; i != b; i = (i + 1) % universe) s.insert(i);
  return s;
}

IndexSet IndexSet::Closed(int universe, int a, int b) {
  IndexSet s = ClosedOpen(universe, a, b);
  s.insert(b);
  return s;
}

IndexSet IndexSet::OpenClosed(int universe, int a, int b) {
  IndexSet s(universe);
  s.CheckIndex(a);
  s.CheckIndex(b);
  if (a == b) return s;
  return ClosedOpen(universe, Mod(a + 1, universe), Mod(b + 1, universe));
}

IndexSet IndexSet::Open(int universe, int a, int b) {
  IndexSet s = OpenClosed(universe, a, b);
  if (!s.empty()) s.erase(b);
  return s;
}

int IndexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool IndexSet::contains(int i) const {
  if (i < 0 || i >= universe_) return false;
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void IndexSet::insert(int i) {
  CheckIndex(i);
  words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void IndexSet::erase(int i) {
  CheckIndex(i);
  words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int w = 0; w < static_cast<int>(words_.size()); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

int IndexSet::front() const {
  for (int w = 0; w < static_cast<int>(words_.size()); ++w) {
    if (words_[w] != 0) return w * kWordBits + std::countr_zero(words_[w]);
  }
  return -1;
}

IndexSet IndexSet::complement() const {
  IndexSet out(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  const int tail = universe_ % kWordBits;
  if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

IndexSet IndexSet::operator&(const IndexSet& other) const {
  CheckSameUniverse(other);
  IndexSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

IndexSet IndexSet::operator|(const IndexSet& other) const {
  CheckSameUniverse(other);
  IndexSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

IndexSet IndexSet::operator-(const IndexSet& other) const {
  CheckSameUniverse(other);
  IndexSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
  return out;
}

int IndexSet::intersection_size(const IndexSet& other) const {
  CheckSameUniverse(other);
  int total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += std::popcount(words_[w] & other.words_[w]);
  }
  return total;
}

bool IndexSet::intersects(const IndexSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::vector<std::uint8_t> IndexSet::indicator() const {
  std::vector<std::uint8_t> out(universe_, 0);
  for (int i : members()) out[i] = 1;
  return out;
}

std::string IndexSet::ToString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : members()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

bool operator<(const IndexSet& a, const IndexSet& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

void IndexSet::CheckIndex(int i) const {
  if (i < 0 || i >= universe_) {
    throw InvalidInput("index " + std::to_string(i) + " outside Z_" +
                       std::to_string(universe_));
  }
}

void IndexSet::CheckSameUniverse(const IndexSet& other) const {
  if (universe_ != other.universe_) {
    throw InvalidInput("IndexSet: universe mismatch");
  }
}

}  // namespace circ
