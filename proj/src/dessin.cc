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

#include "dessins/dessin.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "dessins/error.h"

namespace dessins {
namespace {

std::vector<int> CycleIndexOfDart(const Permutation& p) {
  std::vector<int> index(p.degree() + 1, -1);
  const CycleDecomposition cycles = p.Cycles();
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (int x : cycles[i]) index[x] = static_cast<int>(i);
  }
  return index;
}

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void CollectTrees(const Multigraph& g, size_t next, int needed,
                  std::vector<int>& parent, std::vector<int>& chosen,
                  std::vector<std::vector<int>>& out) {
  if (needed == 0) {
    out.push_back(chosen);
    return;
  }
  if (g.edges.size() - next < static_cast<size_t>(needed)) return;
  const auto [u, v] = g.edges[next];
  const int ru = Find(parent, u);
  const int rv = Find(parent, v);
  if (ru != rv) {
    std::vector<int> saved = parent;
    parent[ru] = rv;
    chosen.push_back(static_cast<int>(next) + 1);
    CollectTrees(g, next + 1, needed - 1, parent, chosen, out);
    chosen.pop_back();
    parent = std::move(saved);
  }
  CollectTrees(g, next + 1, needed, parent, chosen, out);
}

}  // namespace

Dessin Dessin::Make(int n, Permutation sigma, Permutation alpha,
                    std::optional<Permutation> phi) {
  if (n < 1) {
    throw DessinError(ErrorCode::kInvalidArgument,
                      "dart count must be positive");
  }
  if (sigma.degree() != n || alpha.degree() != n ||
      (phi && phi->degree() != n)) {
    throw DessinError(ErrorCode::kDegreeMismatch,
                      "permutation degrees must equal n = " +
                          std::to_string(n));
  }
  const Permutation expected_phi = Inverse(sigma * alpha);
  if (phi && *phi != expected_phi) {
    throw DessinError(ErrorCode::kProductNotIdentity,
                      "sigma * alpha * phi is not the identity");
  }
  if (!IsTransitive(std::vector<Permutation>{sigma, alpha}, n)) {
    throw DessinError(ErrorCode::kNotTransitive,
                      "<sigma, alpha> is not transitive on 1.." +
                          std::to_string(n));
  }
  Dessin d(std::move(sigma), std::move(alpha), expected_phi);
  const int euler = d.sigma_.CycleCount() + d.alpha_.CycleCount() +
                    d.phi_.CycleCount() - n;
  if (euler > 2 || (2 - euler) % 2 != 0) {
    throw DessinError(ErrorCode::kInternal,
                      "Euler characteristic " + std::to_string(euler) +
                          " does not give a nonnegative integer genus");
  }
  return d;
}

int Dessin::genus() const {
  const int euler = sigma_.CycleCount() + alpha_.CycleCount() +
                    phi_.CycleCount() - n_darts();
  return (2 - euler) / 2;
}

const std::pair<int, int>& CleanDessin::edge(int j) const {
  if (j < 1 || j > edge_count()) {
    throw DessinError(ErrorCode::kOutOfRange,
                      "edge " + std::to_string(j) + " outside 1.." +
                          std::to_string(edge_count()));
  }
  return edges_[j - 1];
}

Permutation CleanDessin::Transposition(int j) const {
  const auto [a, b] = edge(j);
  const Cycle c{a, b};
  return Permutation::FromCycles(n_darts(), std::span<const Cycle>(&c, 1));
}

CleanDessin AsClean(const Dessin& d) {
  std::vector<std::pair<int, int>> edges;
  for (const Cycle& c : d.alpha().Cycles()) {
    if (c.size() != 2) {
      throw DessinError(ErrorCode::kNotClean,
                        "alpha is not a fixed-point-free involution");
    }
    edges.emplace_back(c[0], c[1]);
  }
  // Cycles() already orders cycles by their minimal dart.
  return CleanDessin(d, std::move(edges));
}

std::string FormatPartition(const std::vector<int>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += ' ';
    const std::string digits = std::to_string(parts[i]);
    out += digits.size() > 1 ? "(" + digits + ")" : digits;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string Passport::ToString() const {
  return "[" + FormatPartition(sigma) + ", " + FormatPartition(alpha) + ", " +
         FormatPartition(phi) + "]";
}

Passport PassportOf(const Dessin& d) {
  return {d.sigma().CycleType(), d.alpha().CycleType(), d.phi().CycleType()};
}

Dessin Dual(const Dessin& d) {
  return Dessin::Make(d.n_darts(), Inverse(d.phi()), Inverse(d.alpha()),
                      Inverse(d.sigma()));
}

CleanDessin CleanDouble(const Dessin& d) {
  const int n = d.n_darts();
  std::vector<int> sigma(2 * n);
  std::vector<int> alpha(2 * n);
  for (int x = 1; x <= n; ++x) {
    sigma[x - 1] = d.sigma()(x);
    sigma[x + n - 1] = d.alpha()(x) + n;
    alpha[x - 1] = x + n;
    alpha[x + n - 1] = x;
  }
  return AsClean(Dessin::Make(2 * n, Permutation::FromImages(std::move(sigma)),
                              Permutation::FromImages(std::move(alpha))));
}

std::optional<std::uint64_t> MonodromyOrder(const Dessin& d,
                                            std::uint64_t cap) {
  return GroupOrder(std::vector<Permutation>{d.sigma(), d.alpha()}, cap);
}

bool MonodromyIsAbelian(const Dessin& d) {
  return IsAbelian(std::vector<Permutation>{d.sigma(), d.alpha()});
}

int AutomorphismCount(const Dessin& d) {
  const PermutationPair pair{d.sigma(), d.alpha()};
  int count = 0;
  for (int c = 1; c <= d.n_darts(); ++c) {
    if (PropagateConjugator(pair, pair, c)) ++count;
  }
  return count;
}

bool IsRegular(const Dessin& d) { return AutomorphismCount(d) == d.n_darts(); }

std::optional<Permutation> FindIsomorphism(const Dessin& a, const Dessin& b) {
  if (a.n_darts() != b.n_darts()) return std::nullopt;
  if (PassportOf(a) != PassportOf(b)) return std::nullopt;
  return FindSimultaneousConjugator({a.sigma(), a.alpha()},
                                    {b.sigma(), b.alpha()});
}

bool IsIsomorphic(const Dessin& a, const Dessin& b) {
  return FindIsomorphism(a, b).has_value();
}

bool IsSelfDual(const Dessin& d) { return IsIsomorphic(d, Dual(d)); }

Multigraph UnderlyingGraph(const Dessin& d) {
  const std::vector<int> black = CycleIndexOfDart(d.sigma());
  const std::vector<int> white = CycleIndexOfDart(d.alpha());
  const int black_count = d.sigma().CycleCount();
  Multigraph g;
  g.vertex_count = black_count + d.alpha().CycleCount();
  for (int x = 1; x <= d.n_darts(); ++x) {
    g.edges.emplace_back(black[x], black_count + white[x]);
  }
  return g;
}

Multigraph MapGraph(const CleanDessin& d) {
  const std::vector<int> vertex = CycleIndexOfDart(d.sigma());
  Multigraph g;
  g.vertex_count = d.sigma().CycleCount();
  for (const auto& [a, b] : d.edges()) g.edges.emplace_back(vertex[a], vertex[b]);
  return g;
}

std::vector<std::vector<int>> SpanningTrees(const Multigraph& g) {
  if (g.vertex_count < 1) {
    throw DessinError(ErrorCode::kInvalidArgument, "graph has no vertices");
  }
  if (static_cast<int>(g.edges.size()) > kMaxSpanningTreeEdges) {
    throw DessinError(ErrorCode::kBoundExceeded,
                      "spanning-tree enumeration is limited to " +
                          std::to_string(kMaxSpanningTreeEdges) + " edges");
  }
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) {
      throw DessinError(ErrorCode::kOutOfRange, "edge endpoint out of range");
    }
    parent[Find(parent, u)] = Find(parent, v);
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    if (Find(parent, v) != Find(parent, 0)) {
      throw DessinError(ErrorCode::kDisconnected, "graph is disconnected");
    }
  }
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::vector<int>> trees;
  std::vector<int> chosen;
  CollectTrees(g, 0, g.vertex_count - 1, parent, chosen, trees);
  return trees;
}

}  // namespace dessins
