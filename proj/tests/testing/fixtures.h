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

#ifndef DESSINS_TESTS_TESTING_FIXTURES_H_
#define DESSINS_TESTS_TESTING_FIXTURES_H_

#include <string_view>
#include <vector>

#include "dessins/catalogue.h"
#include "dessins/dessin.h"

namespace dessins::testing {

inline Permutation P(std::string_view cycles, int n) {
  return Permutation::Parse(cycles, n);
}

inline Dessin MakeDessin(int n, std::string_view sigma,
                         std::string_view alpha) {
  return Dessin::Make(n, P(sigma, n), P(alpha, n));
}

inline CleanDessin MakeMap(int n, std::string_view sigma,
                           std::string_view alpha) {
  return AsClean(MakeDessin(n, sigma, alpha));
}

// Genus 0 hypermap, monodromy S_5.
inline Dessin Symmetric5() { return MakeDessin(5, "(2 3 4)", "(1 2)(3 5 4)"); }

// Plane digon: two vertices, two parallel edges.
inline CleanDessin Digon() { return MakeMap(4, "(1 4)(2 3)", "(1 2)(3 4)"); }

// Regular hypermap with cyclic monodromy of order 6.
inline Dessin Cyclic6() {
  return MakeDessin(6, "(1 2)(3 4)(5 6)", "(1 3 5)(2 4 6)");
}

// One vertex, four edges, genus 1.
inline CleanDessin Octagon() {
  return MakeMap(8, "(1 3 5 7 8 6 2 4)", "(1 2)(3 4)(5 6)(7 8)");
}

// Theta graph on the torus: two vertices, three edges, one face.
inline CleanDessin ThetaTorus() {
  return MakeMap(6, "(1 2 3)(4 5 6)", "(1 4)(2 5)(3 6)");
}

// One contractible loop at a single vertex.
inline CleanDessin Loop() { return MakeMap(2, "(1 2)", "(1 2)"); }

// One edge between two vertices.
inline CleanDessin Segment() { return MakeMap(2, "", "(1 2)"); }

// Path with two edges.
inline CleanDessin Path2() { return MakeMap(4, "(2 3)", "(1 2)(3 4)"); }

// All maps on 2, 4 and 6 darts.
inline const std::vector<CleanDessin>& SmallMaps() {
  static const auto* maps = [] {
    auto* out = new std::vector<CleanDessin>;
    for (int n : {2, 4, 6}) {
      for (CleanDessin& d : EnumerateCleanDessins(n)) out->push_back(d);
    }
    return out;
  }();
  return *maps;
}

// Every subset of {1..m}.
inline std::vector<EdgeSet> AllSubsets(int m) {
  std::vector<EdgeSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    out.push_back(EdgeSet::FromMask(mask));
  }
  return out;
}

}  // namespace dessins::testing

#endif  // DESSINS_TESTS_TESTING_FIXTURES_H_
