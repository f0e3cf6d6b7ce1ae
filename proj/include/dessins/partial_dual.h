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

#ifndef DESSINS_PARTIAL_DUAL_H_
#define DESSINS_PARTIAL_DUAL_H_

#include "dessins/dessin.h"
#include "dessins/edge_set.h"

namespace dessins {

// Partial duality keeps dart labels and alpha; only sigma and phi change.
// The result is always a valid map again (transitive, orientable).

// (sigma c_j, alpha, c_j phi). Throws kOutOfRange.
CleanDessin PartialDualEdge(const CleanDessin& d, int j);

// (sigma c_S, alpha, c_S phi) with c_S the product of the c_j, j in S.
// The empty set gives d back and the full edge set gives Dual(d).
CleanDessin PartialDualSet(const CleanDessin& d, EdgeSet edges);

// Partial dual of a hypermap at its k-th alpha-cycle c (cycles ordered by
// minimal dart): (sigma c, c^-1 alpha', c phi) where alpha' is alpha with c
// removed. Throws kOutOfRange.
Dessin HypermapPartialDual(const Dessin& d, int k);

struct OneFaceWitness {
  EdgeSet edges;       // S
  CleanDessin result;  // PartialDualSet(d, S), which has exactly one face
};

// A one-face partial dual. One-face maps return (empty set, d). Otherwise
// S = E \ F for the first feasible set F of the delta-matroid of d in
// (size, lexicographic) order.
OneFaceWitness OneFacePartialDual(const CleanDessin& d);

}  // namespace dessins

#endif  // DESSINS_PARTIAL_DUAL_H_
