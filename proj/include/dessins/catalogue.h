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

#ifndef DESSINS_CATALOGUE_H_
#define DESSINS_CATALOGUE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessins/delta_matroid.h"
#include "dessins/dessin.h"

namespace dessins {

inline constexpr int kMaxEnumerationDarts = 10;

// Every map on n darts exactly once up to isomorphism. alpha is fixed to
// (1 2)(3 4)...(n-1 n) and sigma runs over all transitive choices; each class
// is represented by its lexicographically smallest sigma under conjugation by
// the centralizer of alpha. Output is sorted by that sigma. Throws
// kInvalidArgument for odd n and kBoundExceeded past kMaxEnumerationDarts.
std::vector<CleanDessin> EnumerateCleanDessins(int n_darts);

// The smallest image sequence of sigma under conjugation by the centralizer
// of alpha = (1 2)(3 4)... . Throws kInvalidArgument if d.alpha() is not that
// involution.
Permutation CanonicalSigma(const CleanDessin& d);

// Maps with more edges than this are reported without a delta-matroid.
inline constexpr int kMaxReportEdges = 10;

struct CatalogueEntry {
  Dessin dessin;
  Passport passport;
  int genus;
  // Absent above the group-order degree bound.
  std::optional<std::uint64_t> monodromy_order;
  bool abelian;
  int automorphisms;
  bool regular;
  bool self_dual;
  bool clean;
  std::optional<DeltaMatroid> delta;
  std::optional<bool> delta_is_matroid;
  std::optional<bool> delta_self_dual;

  // One JSON object, keys sorted.
  std::string ToJson() const;
  // `key: value` lines.
  std::string ToText() const;
};

CatalogueEntry CatalogueReport(const Dessin& d);

}  // namespace dessins

#endif  // DESSINS_CATALOGUE_H_
