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

#include "dessins/partial_dual.h"

#include <string>
#include <vector>

#include "dessins/delta_matroid.h"
#include "dessins/error.h"

namespace dessins {
namespace {

// Product of the transpositions of the edges in S; they are disjoint, so the
// order is irrelevant.
Permutation EdgeProduct(const CleanDessin& d, EdgeSet edges) {
  std::vector<int> images(d.n_darts());
  for (int x = 1; x <= d.n_darts(); ++x) images[x - 1] = x;
  for (int j : edges.Elements()) {
    const auto [a, b] = d.edges()[j - 1];
    images[a - 1] = b;
    images[b - 1] = a;
  }
  return Permutation::FromImages(std::move(images));
}

}  // namespace

CleanDessin PartialDualEdge(const CleanDessin& d, int j) {
  const Permutation c = d.Transposition(j);
  return AsClean(
      Dessin::Make(d.n_darts(), d.sigma() * c, d.alpha(), c * d.phi()));
}

CleanDessin PartialDualSet(const CleanDessin& d, EdgeSet edges) {
  if (!edges.WithinGround(d.edge_count())) {
    throw DessinError(ErrorCode::kOutOfRange,
                      "edge set " + edges.ToString() + " outside 1.." +
                          std::to_string(d.edge_count()));
  }
  const Permutation c = EdgeProduct(d, edges);
  return AsClean(
      Dessin::Make(d.n_darts(), d.sigma() * c, d.alpha(), c * d.phi()));
}

Dessin HypermapPartialDual(const Dessin& d, int k) {
  const CycleDecomposition cycles = d.alpha().Cycles();
  if (k < 1 || k > static_cast<int>(cycles.size())) {
    throw DessinError(ErrorCode::kOutOfRange,
                      "alpha-cycle " + std::to_string(k) + " outside 1.." +
                          std::to_string(cycles.size()));
  }
  const int n = d.n_darts();
  const Permutation c =
      Permutation::FromCycles(n, std::span<const Cycle>(&cycles[k - 1], 1));
  std::vector<Cycle> rest;
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
    if (i != k - 1) rest.push_back(cycles[i]);
  }
  const Permutation alpha_rest = Permutation::FromCycles(n, rest);
  return Dessin::Make(n, d.sigma() * c, Inverse(c) * alpha_rest,
                      c * d.phi());
}

OneFaceWitness OneFacePartialDual(const CleanDessin& d) {
  if (d.phi().CycleCount() == 1) return {EdgeSet(), d};
  const DeltaMatroid delta = DeltaMatroidOfMap(d);
  const EdgeSet first = delta.feasible().front();
  const EdgeSet edges = first.Complement(d.edge_count());
  return {edges, PartialDualSet(d, edges)};
}

}  // namespace dessins
