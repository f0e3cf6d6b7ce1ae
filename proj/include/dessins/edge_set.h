// Copyright 2026 The Authors.
//
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

#ifndef DESSINS_EDGE_SET_H_
#define DESSINS_EDGE_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dessins {

// A subset of the edge indices {1..64}, stored as a bitmask (bit j-1 is
// edge j). Complements are always taken relative to an explicit ground size.
class EdgeSet {
 public:
  static constexpr int kMaxElement = 64;

  constexpr EdgeSet() = default;
  EdgeSet(std::initializer_list<int> elements);
  static EdgeSet FromElements(const std::vector<int>& elements);
  static constexpr EdgeSet FromMask(std::uint64_t mask) { return EdgeSet(mask); }
  // {1..m}.
  static EdgeSet Full(int m);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool Contains(int j) const {
    return j >= 1 && j <= kMaxElement && ((mask_ >> (j - 1)) & 1u);
  }
  // Largest element, 0 for the empty set.
  constexpr int MaxElement() const { return 64 - std::countl_zero(mask_); }
  // True iff every element lies in [1, m].
  bool WithinGround(int m) const;

  std::vector<int> Elements() const;

  EdgeSet SymmetricDifference(EdgeSet other) const {
    return EdgeSet(mask_ ^ other.mask_);
  }
  EdgeSet Complement(int m) const;

  // "{1,3}"; the empty set is "{}".
  std::string ToString() const;

  friend constexpr bool operator==(EdgeSet, EdgeSet) = default;

  // Order by size, then lexicographically on the sorted element lists.
  friend std::strong_ordering operator<=>(EdgeSet a, EdgeSet b);

 private:
  explicit constexpr EdgeSet(std::uint64_t mask) : mask_(mask) {}

  std::uint64_t mask_ = 0;
};

}  // namespace dessins

#endif  // DESSINS_EDGE_SET_H_
