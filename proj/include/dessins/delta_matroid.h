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

#ifndef DESSINS_DELTA_MATROID_H_
#define DESSINS_DELTA_MATROID_H_

#include <string>
#include <vector>

#include "dessins/dessin.h"
#include "dessins/edge_set.h"

namespace dessins {

// Symmetric exchange axiom: for F1, F2 feasible and x in F1 ^ F2 there is
// y in F1 ^ F2 (y == x allowed) with F1 ^ {x, y} feasible. Exhaustive,
// O(|family|^2 m). Throws kEmptyFamily and kOutOfRange.
bool CheckSymmetricAxiom(int ground_size, const std::vector<EdgeSet>& family);

// A delta-matroid on {1..m}. The feasible family is kept sorted by size and
// then lexicographically, without duplicates.
class DeltaMatroid {
 public:
  // Throws kEmptyFamily, kOutOfRange, or kInvalidArgument when the symmetric
  // axiom fails.
  static DeltaMatroid Create(int ground_size, std::vector<EdgeSet> feasible);

  int ground_size() const { return ground_size_; }
  const std::vector<EdgeSet>& feasible() const { return feasible_; }
  bool IsFeasible(EdgeSet f) const;

  // {"feasible":[[1],[2]],"ground":2}
  std::string ToJson() const;
  // "{{1},{2}}"
  std::string ToString() const;

  friend bool operator==(const DeltaMatroid&, const DeltaMatroid&) = default;

 private:
  DeltaMatroid(int ground_size, std::vector<EdgeSet> feasible)
      : ground_size_(ground_size), feasible_(std::move(feasible)) {}

  int ground_size_;
  std::vector<EdgeSet> feasible_;
};

// Upper bound on the edge count for the 2^m feasibility scans.
inline constexpr int kMaxScanEdges = 20;

// F is feasible iff the partial dual with respect to E \ F has one face.
// Throws kBoundExceeded past kMaxScanEdges.
DeltaMatroid DeltaMatroidOfMap(const CleanDessin& d);

// Independent route: F is feasible iff the sub-map on the darts of F touches
// every vertex, is connected and has a single boundary cycle. The empty
// sub-map counts as one face, so the empty set is feasible exactly for
// one-vertex maps.
DeltaMatroid QuasiTreeOracle(const CleanDessin& d);

// {F ^ S}. Throws kOutOfRange.
DeltaMatroid Twist(const DeltaMatroid& delta, EdgeSet s);

// {E \ F}.
DeltaMatroid DualDeltaMatroid(const DeltaMatroid& delta);

// Equicardinal family satisfying the basis exchange axiom.
bool IsMatroid(const DeltaMatroid& delta);

inline constexpr int kMaxIsomorphismGround = 10;

// Searches for a bijection of ground sets carrying feasible sets onto
// feasible sets. Throws kBoundExceeded past kMaxIsomorphismGround.
bool DeltaIsomorphic(const DeltaMatroid& a, const DeltaMatroid& b);

bool DeltaSelfDual(const DeltaMatroid& delta);

}  // namespace dessins

#endif  // DESSINS_DELTA_MATROID_H_
