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

#ifndef DESSINS_DESSIN_H_
#define DESSINS_DESSIN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dessins/perm.h"

namespace dessins {

// A transitive triple (sigma, alpha, phi) with sigma * alpha * phi = 1,
// products read left to right. sigma rotates darts around black vertices,
// alpha around white vertices and phi around faces.
class Dessin {
 public:
  // Validates the triple. When phi is absent it is set to (sigma alpha)^-1;
  // when present it is re-checked. Throws kDegreeMismatch,
  // kProductNotIdentity or kNotTransitive.
  static Dessin Make(int n, Permutation sigma, Permutation alpha,
                     std::optional<Permutation> phi = std::nullopt);

  int n_darts() const { return sigma_.degree(); }
  const Permutation& sigma() const { return sigma_; }
  const Permutation& alpha() const { return alpha_; }
  const Permutation& phi() const { return phi_; }

  int genus() const;

  friend bool operator==(const Dessin&, const Dessin&) = default;

 private:
  Dessin(Permutation sigma, Permutation alpha, Permutation phi)
      : sigma_(std::move(sigma)),
        alpha_(std::move(alpha)),
        phi_(std::move(phi)) {}

  Permutation sigma_;
  Permutation alpha_;
  Permutation phi_;
};

// A dessin whose alpha is a fixed-point-free involution, i.e. a map. Edge j
// (1-based) is the j-th transposition of alpha when transpositions are sorted
// by their smaller dart.
class CleanDessin {
 public:
  const Dessin& dessin() const { return dessin_; }
  int n_darts() const { return dessin_.n_darts(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Permutation& sigma() const { return dessin_.sigma(); }
  const Permutation& alpha() const { return dessin_.alpha(); }
  const Permutation& phi() const { return dessin_.phi(); }
  int genus() const { return dessin_.genus(); }

  // Darts (a, b), a < b, of edge j. Throws kOutOfRange.
  const std::pair<int, int>& edge(int j) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // The transposition c_j.
  Permutation Transposition(int j) const;

  friend bool operator==(const CleanDessin& a, const CleanDessin& b) {
    return a.dessin_ == b.dessin_;
  }

 private:
  friend CleanDessin AsClean(const Dessin& d);

  CleanDessin(Dessin d, std::vector<std::pair<int, int>> edges)
      : dessin_(std::move(d)), edges_(std::move(edges)) {}

  Dessin dessin_;
  std::vector<std::pair<int, int>> edges_;
};

// Throws kNotClean unless alpha is a fixed-point-free involution.
CleanDessin AsClean(const Dessin& d);

struct Passport {
  std::vector<int> sigma;
  std::vector<int> alpha;
  std::vector<int> phi;

  // "[3 1^2, 3 2, 4 1]"; multi-digit parts are parenthesised, "(11)^2 1".
  std::string ToString() const;

  friend bool operator==(const Passport&, const Passport&) = default;
};

// Compact form of one decreasing partition, e.g. "3^4 2 1^3".
std::string FormatPartition(const std::vector<int>& parts);

Passport PassportOf(const Dessin& d);

// (phi^-1, alpha^-1, sigma^-1).
Dessin Dual(const Dessin& d);

// The map on 2n darts obtained by recolouring white vertices black and adding
// a white vertex on every dart: dart d splits into d (black end) and d + n
// (white end). Its monodromy group is the cartography group of d.
CleanDessin CleanDouble(const Dessin& d);

// Order of <sigma, alpha>; nullopt past `cap`. Needs n <= 16.
std::optional<std::uint64_t> MonodromyOrder(
    const Dessin& d, std::uint64_t cap = kDefaultOrderCap);
bool MonodromyIsAbelian(const Dessin& d);

// Number of permutations commuting with sigma and alpha. At most n, since the
// centralizer of a transitive group acts semiregularly.
int AutomorphismCount(const Dessin& d);
bool IsRegular(const Dessin& d);

bool IsIsomorphic(const Dessin& a, const Dessin& b);
// A relabelling g taking a onto b, if one exists.
std::optional<Permutation> FindIsomorphism(const Dessin& a, const Dessin& b);
bool IsSelfDual(const Dessin& d);

// Undirected multigraph on vertices 0..vertex_count-1. Loops and parallel
// edges are allowed; edges[i] is edge number i + 1.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Vertices are the sigma-cycles followed by the alpha-cycles (canonical
// order); edge d joins the sigma-cycle and the alpha-cycle of dart d.
Multigraph UnderlyingGraph(const Dessin& d);

// The map itself as a graph: vertices are sigma-cycles, edge j joins the
// vertices of the two darts of c_j.
Multigraph MapGraph(const CleanDessin& d);

inline constexpr int kMaxSpanningTreeEdges = 30;

// Every spanning tree as a sorted list of 1-based edge numbers, in
// lexicographic order. Exhaustive over (V-1)-subsets. Throws kDisconnected
// and kBoundExceeded.
std::vector<std::vector<int>> SpanningTrees(const Multigraph& g);

}  // namespace dessins

#endif  // DESSINS_DESSIN_H_
