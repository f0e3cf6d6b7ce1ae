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

#include "dessins/monodromy.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "dessins/error.h"
#include "json.hpp"

namespace dessins {
namespace {

struct OpenEdge {
  Cycle cycle;
  int start_vertex;
  int level_start;
};

const Cycle& CycleContaining(const CycleDecomposition& cycles, int dart) {
  for (const Cycle& c : cycles) {
    if (std::find(c.begin(), c.end(), dart) != c.end()) return c;
  }
  throw DessinError(ErrorCode::kInternal, "dart missing from decomposition");
}

size_t OpenIndexOf(const std::vector<OpenEdge>& open, int dart) {
  for (size_t i = 0; i < open.size(); ++i) {
    const Cycle& c = open[i].cycle;
    if (std::find(c.begin(), c.end(), dart) != c.end()) return i;
  }
  throw DessinError(ErrorCode::kInternal, "dart missing from open edges");
}

std::string_view KindName(VertexKind kind) {
  switch (kind) {
    case VertexKind::kSource: return "source";
    case VertexKind::kEvent: return "event";
    case VertexKind::kSink: return "sink";
  }
  return "unknown";
}

std::vector<int> Support(const Cycle& c) {
  std::vector<int> s = c;
  std::sort(s.begin(), s.end());
  return s;
}

std::string SupportLabel(const Cycle& c) {
  std::string out;
  for (int x : Support(c)) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out + ":" + std::to_string(c.size());
}

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<int> Degrees(const Multigraph& g) {
  std::vector<int> degree(g.vertex_count, 0);
  for (const auto& [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  return degree;
}

class GraphIsomorphism {
 public:
  GraphIsomorphism(const Multigraph& a, const Multigraph& b)
      : n_(a.vertex_count),
        adj_a_(Adjacency(a)),
        adj_b_(Adjacency(b)),
        degree_a_(Degrees(a)),
        degree_b_(Degrees(b)),
        image_(n_, -1),
        used_(n_, false) {
    // Match high-degree vertices first; ties keep index order.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return degree_a_[x] > degree_a_[y];
    });
  }

  bool Run() {
    std::vector<int> da = degree_a_;
    std::vector<int> db = degree_b_;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db && Extend(0);
  }

 private:
  static std::vector<std::vector<int>> Adjacency(const Multigraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count,
                                      std::vector<int>(g.vertex_count, 0));
    for (const auto& [u, v] : g.edges) {
      ++adj[u][v];
      if (u != v) ++adj[v][u];
    }
    return adj;
  }

  bool Extend(size_t depth) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (int target = 0; target < n_; ++target) {
      if (used_[target] || degree_a_[u] != degree_b_[target]) continue;
      if (adj_a_[u][u] != adj_b_[target][target]) continue;
      bool ok = true;
      for (size_t k = 0; k < depth && ok; ++k) {
        const int w = order_[k];
        ok = adj_a_[u][w] == adj_b_[target][image_[w]];
      }
      if (!ok) continue;
      image_[u] = target;
      used_[target] = true;
      if (Extend(depth + 1)) return true;
      used_[target] = false;
      image_[u] = -1;
    }
    return false;
  }

  int n_;
  std::vector<std::vector<int>> adj_a_;
  std::vector<std::vector<int>> adj_b_;
  std::vector<int> degree_a_;
  std::vector<int> degree_b_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

int MonodromyGraph::Degree(int vertex) const {
  int degree = 0;
  for (const MonodromyEdge& e : edges) {
    degree += (e.from == vertex) + (e.to == vertex);
  }
  return degree;
}

Multigraph MonodromyGraph::AsMultigraph() const {
  Multigraph g;
  g.vertex_count = static_cast<int>(vertices.size());
  for (const MonodromyEdge& e : edges) g.edges.emplace_back(e.from, e.to);
  return g;
}

Multigraph TropicalCurve::AsMultigraph() const {
  Multigraph g;
  g.vertex_count = vertex_count();
  for (const TropicalEdge& e : edges) g.edges.emplace_back(e.from, e.to);
  return g;
}

MonodromyGraph BuildMonodromyGraph(const CleanDessin& d,
                                   const std::vector<int>& order) {
  const int m = d.edge_count();
  std::vector<bool> hit(m + 1, false);
  bool valid = static_cast<int>(order.size()) == m;
  for (int j : order) {
    if (!valid) break;
    valid = j >= 1 && j <= m && !hit[j];
    if (valid) hit[j] = true;
  }
  if (!valid) {
    throw DessinError(ErrorCode::kInvalidArgument,
                      "order must be a permutation of the edges 1.." +
                          std::to_string(m));
  }

  MonodromyGraph g;
  std::vector<OpenEdge> open;
  for (const Cycle& c : d.sigma().Cycles()) {
    open.push_back({c, static_cast<int>(g.vertices.size()), 0});
    g.vertices.push_back({VertexKind::kSource, 0});
  }

  Permutation running = d.sigma();
  for (int step = 1; step <= m; ++step) {
    const auto [p, q] = d.edge(order[step - 1]);
    const int event = static_cast<int>(g.vertices.size());
    g.vertices.push_back({VertexKind::kEvent, step});

    std::vector<size_t> closing{OpenIndexOf(open, p)};
    const size_t other = OpenIndexOf(open, q);
    if (other != closing.front()) closing.push_back(other);
    std::sort(closing.begin(), closing.end());
    for (size_t idx : closing) {
      const OpenEdge& e = open[idx];
      g.edges.push_back({e.start_vertex, event, e.cycle, e.level_start, step});
    }
    for (auto it = closing.rbegin(); it != closing.rend(); ++it) {
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(*it));
    }

    running = running * d.Transposition(order[step - 1]);
    const CycleDecomposition cycles = running.Cycles();
    const Cycle& with_p = CycleContaining(cycles, p);
    const Cycle& with_q = CycleContaining(cycles, q);
    std::vector<Cycle> created{with_p};
    if (with_q != with_p) created.push_back(with_q);
    std::sort(created.begin(), created.end());
    for (Cycle& c : created) open.push_back({std::move(c), event, step});
  }

  std::sort(open.begin(), open.end(),
            [](const OpenEdge& a, const OpenEdge& b) { return a.cycle < b.cycle; });
  for (const OpenEdge& e : open) {
    const int sink = static_cast<int>(g.vertices.size());
    g.vertices.push_back({VertexKind::kSink, m + 1});
    g.edges.push_back({e.start_vertex, sink, e.cycle, e.level_start, m + 1});
  }
  return g;
}

int BettiNumber(const Multigraph& g) {
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  int components = g.vertex_count;
  for (const auto& [u, v] : g.edges) {
    const int ru = Find(parent, u);
    const int rv = Find(parent, v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return static_cast<int>(g.edges.size()) - g.vertex_count + components;
}

int BettiNumber(const MonodromyGraph& g) {
  return BettiNumber(g.AsMultigraph());
}

TropicalCurve ToTropicalCurve(const MonodromyGraph& g) {
  TropicalCurve t;
  for (const MonodromyVertex& v : g.vertices) t.vertex_kinds.push_back(v.kind);
  const std::vector<int> degree = Degrees(g.AsMultigraph());
  for (const MonodromyEdge& e : g.edges) {
    const bool leaf = degree[e.from] == 1 || degree[e.to] == 1;
    t.edges.push_back({e.from, e.to,
                       leaf ? std::nullopt
                            : std::optional<int>(static_cast<int>(e.cycle.size()))});
  }
  return t;
}

TropicalInvariants ComputeTropicalInvariants(const TropicalCurve& t) {
  TropicalInvariants inv{0, 0, 0, 0};
  for (const TropicalEdge& e : t.edges) {
    (e.length ? inv.finite_edges : inv.infinite_edges) += 1;
  }
  const Multigraph g = t.AsMultigraph();
  for (int d : Degrees(g)) inv.trivalent_vertices += d == 3;
  inv.betti = BettiNumber(g);
  return inv;
}

bool MultigraphIsomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count > kMaxIsomorphismVertices ||
      b.vertex_count > kMaxIsomorphismVertices) {
    throw DessinError(ErrorCode::kBoundExceeded,
                      "multigraph isomorphism is limited to " +
                          std::to_string(kMaxIsomorphismVertices) +
                          " vertices");
  }
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) {
    return false;
  }
  return GraphIsomorphism(a, b).Run();
}

std::string ToDot(const MonodromyGraph& g) {
  std::string out = "graph monodromy {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"" +
           std::string(KindName(g.vertices[i].kind)) + "\"];\n";
  }
  for (const MonodromyEdge& e : g.edges) {
    out += "  v" + std::to_string(e.from) + " -- v" + std::to_string(e.to) +
           " [label=\"" + SupportLabel(e.cycle) + "\"];\n";
  }
  return out + "}\n";
}

std::string ToDot(const TropicalCurve& t) {
  std::string out = "graph tropical {\n";
  for (int i = 0; i < t.vertex_count(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"" +
           std::string(KindName(t.vertex_kinds[i])) + "\"];\n";
  }
  for (const TropicalEdge& e : t.edges) {
    out += "  v" + std::to_string(e.from) + " -- v" + std::to_string(e.to) +
           " [label=\"" +
           (e.length ? std::to_string(*e.length) : std::string("∞")) +
           "\"];\n";
  }
  return out + "}\n";
}

std::string ToJson(const MonodromyGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    vertices.push_back({{"id", i},
                        {"kind", KindName(g.vertices[i].kind)},
                        {"level", g.vertices[i].level}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const MonodromyEdge& e : g.edges) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"cycle", e.cycle},
                     {"support", Support(e.cycle)},
                     {"length", e.cycle.size()},
                     {"level_start", e.level_start},
                     {"level_end", e.level_end}});
  }
  return nlohmann::json{{"vertices", vertices}, {"edges", edges}}.dump();
}

std::string ToJson(const TropicalCurve& t) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int i = 0; i < t.vertex_count(); ++i) {
    vertices.push_back({{"id", i}, {"kind", KindName(t.vertex_kinds[i])}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const TropicalEdge& e : t.edges) {
    nlohmann::json length = e.length ? nlohmann::json(*e.length)
                                     : nlohmann::json("inf");
    edges.push_back({{"from", e.from}, {"to", e.to}, {"length", length}});
  }
  return nlohmann::json{{"vertices", vertices}, {"edges", edges}}.dump();
}

}  // namespace dessins
