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

#ifndef DESSINS_MONODROMY_H_
#define DESSINS_MONODROMY_H_

#include <optional>
#include <string>
#include <vector>

#include "dessins/dessin.h"

namespace dessins {

enum class VertexKind { kSource, kEvent, kSink };

struct MonodromyVertex {
  VertexKind kind;
  // 0 for sources, t for the event of step t, edge_count + 1 for sinks.
  int level;
};

// One maximal run of levels over which a cycle of the running product is
// untouched. `cycle` is the cycle at the start of the run.
struct MonodromyEdge {
  int from;  // vertex index, lower level
  int to;    // vertex index, higher level
  Cycle cycle;
  int level_start;
  int level_end;
};

// The leveled graph recorded while multiplying sigma by the transpositions
// of alpha one at a time. Every step merges two cycles or splits one, so it
// creates exactly one trivalent event vertex.
struct MonodromyGraph {
  std::vector<MonodromyVertex> vertices;
  std::vector<MonodromyEdge> edges;

  int Degree(int vertex) const;
  Multigraph AsMultigraph() const;
};

// `order` lists the edge numbers 1..m in multiplication order. Throws
// kInvalidArgument unless it is a permutation of 1..m.
MonodromyGraph BuildMonodromyGraph(const CleanDessin& d,
                                   const std::vector<int>& order);

// E - V + C.
int BettiNumber(const Multigraph& g);
int BettiNumber(const MonodromyGraph& g);

struct TropicalEdge {
  int from;
  int to;
  // nullopt encodes an infinite length.
  std::optional<int> length;
};

// Underlying multigraph plus edge lengths: edges at degree-1 vertices are
// infinite, all others carry the length of their cycle.
struct TropicalCurve {
  std::vector<VertexKind> vertex_kinds;
  std::vector<TropicalEdge> edges;

  int vertex_count() const { return static_cast<int>(vertex_kinds.size()); }

  Multigraph AsMultigraph() const;
};

TropicalCurve ToTropicalCurve(const MonodromyGraph& g);

struct TropicalInvariants {
  int finite_edges;
  int infinite_edges;
  int trivalent_vertices;
  int betti;

  friend bool operator==(const TropicalInvariants&,
                         const TropicalInvariants&) = default;
};

TropicalInvariants ComputeTropicalInvariants(const TropicalCurve& t);

inline constexpr int kMaxIsomorphismVertices = 20;

// Unlabelled multigraph isomorphism respecting edge multiplicities and loops.
// Throws kBoundExceeded past kMaxIsomorphismVertices.
bool MultigraphIsomorphic(const Multigraph& a, const Multigraph& b);

std::string ToDot(const MonodromyGraph& g);
std::string ToDot(const TropicalCurve& t);
std::string ToJson(const MonodromyGraph& g);
std::string ToJson(const TropicalCurve& t);

}  // namespace dessins

#endif  // DESSINS_MONODROMY_H_
