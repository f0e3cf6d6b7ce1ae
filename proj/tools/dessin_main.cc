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

// Command-line front end. Exit status: 0 success, 1 invalid data or a failed
// computation bound, 2 usage errors (bad flags, unreadable files).

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dessins/catalogue.h"
#include "dessins/delta_matroid.h"
#include "dessins/dessin.h"
#include "dessins/error.h"
#include "dessins/monodromy.h"
#include "dessins/partial_dual.h"
#include "dessins/text_format.h"

namespace dessins {
namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Dessin LoadDessin(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return ParseDessinText(text);
}

std::vector<int> DefaultOrder(const CleanDessin& d) {
  std::vector<int> order(d.edge_count());
  std::iota(order.begin(), order.end(), 1);
  return order;
}

void PrintDelta(const DeltaMatroid& delta, bool json) {
  std::cout << (json ? delta.ToJson() : delta.ToString()) << "\n";
}

void PrintMonodromyText(const MonodromyGraph& g) {
  static constexpr const char* kKinds[] = {"source", "event", "sink"};
  std::cout << "vertices: " << g.vertices.size() << "\n"
            << "edges: " << g.edges.size() << "\n"
            << "betti: " << BettiNumber(g) << "\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    std::cout << "v" << i << " " << kKinds[static_cast<int>(g.vertices[i].kind)]
              << " level " << g.vertices[i].level << "\n";
  }
  for (const MonodromyEdge& e : g.edges) {
    const Permutation cycle = Permutation::FromCycles(
        static_cast<int>(*std::max_element(e.cycle.begin(), e.cycle.end())),
        std::span<const Cycle>(&e.cycle, 1));
    std::string label = cycle.ToString();
    if (label.empty()) label = "(" + std::to_string(e.cycle.front()) + ")";
    std::cout << "v" << e.from << " -- v" << e.to << " " << label
              << " length " << e.cycle.size() << "\n";
  }
}

void PrintTropicalText(const TropicalCurve& t) {
  const TropicalInvariants inv = ComputeTropicalInvariants(t);
  std::cout << "finite edges: " << inv.finite_edges << "\n"
            << "infinite edges: " << inv.infinite_edges << "\n"
            << "trivalent vertices: " << inv.trivalent_vertices << "\n"
            << "betti: " << inv.betti << "\n";
  for (const TropicalEdge& e : t.edges) {
    std::cout << "v" << e.from << " -- v" << e.to << " "
              << (e.length ? std::to_string(*e.length) : std::string("∞"))
              << "\n";
  }
}

int Run(int argc, char** argv) {
  CLI::App app{"Dessins d'enfants as permutation triples"};
  app.require_subcommand(1);
  std::string file;
  std::string file2;
  bool json = false;

  auto* validate = app.add_subcommand("validate", "Check a .dsn file");
  validate->add_option("file", file, ".dsn file or - for stdin")->required();

  auto* info = app.add_subcommand("info", "Invariant report");
  info->add_option("file", file)->required();
  info->add_flag("--json", json, "JSON output");

  auto* dual = app.add_subcommand("dual", "Dual dessin");
  dual->add_option("file", file)->required();

  std::vector<int> edges;
  auto* pdual = app.add_subcommand("pdual", "Partial dual of a map");
  pdual->add_option("file", file)->required();
  pdual->add_option("--edges", edges, "Comma-separated edge numbers")
      ->required()
      ->delimiter(',');

  int cycle_index = 0;
  auto* pdual_hyper =
      app.add_subcommand("pdual-hyper", "Partial dual at one alpha-cycle");
  pdual_hyper->add_option("file", file)->required();
  pdual_hyper->add_option("--cycle", cycle_index, "1-based alpha-cycle index")
      ->required();

  bool oracle = false;
  auto* delta = app.add_subcommand("delta", "Delta-matroid of a map");
  delta->add_option("file", file)->required();
  delta->add_flag("--oracle", oracle, "Use the quasi-tree construction");
  delta->add_flag("--json", json, "JSON output");

  std::vector<int> twist_set;
  auto* twist = app.add_subcommand("twist", "Twist of the delta-matroid");
  twist->add_option("file", file)->required();
  twist->add_option("--set", twist_set, "Comma-separated edge numbers")
      ->required()
      ->delimiter(',');
  twist->add_flag("--json", json, "JSON output");

  auto* oneface =
      app.add_subcommand("onefacedual", "A partial dual with one face");
  oneface->add_option("file", file)->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();

  std::vector<int> order;
  bool dot = false;
  auto* monograph = app.add_subcommand("monograph", "Monodromy graph");
  monograph->add_option("file", file)->required();
  monograph->add_option("--order", order, "Edge multiplication order")
      ->delimiter(',');
  monograph->add_flag("--dot", dot, "Graphviz output");
  monograph->add_flag("--json", json, "JSON output");

  auto* tropical = app.add_subcommand("tropical", "Abstract tropical curve");
  tropical->add_option("file", file)->required();
  tropical->add_option("--order", order, "Edge multiplication order")
      ->delimiter(',');
  tropical->add_flag("--dot", dot, "Graphviz output");
  tropical->add_flag("--json", json, "JSON output");

  int darts = 0;
  bool report = false;
  auto* enumerate =
      app.add_subcommand("enumerate", "All maps on a number of darts");
  enumerate->add_option("--darts", darts, "Even dart count, at most 10")
      ->required();
  enumerate->add_flag("--report", report, "Invariant report per map");
  enumerate->add_flag("--json", json, "JSON lines (with --report)");

  for (CLI::App* sub : {monograph, tropical}) {
    sub->get_option("--dot")->excludes(sub->get_option("--json"));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*validate) {
    const Dessin d = LoadDessin(file);
    std::cout << "valid: n = " << d.n_darts() << ", genus " << d.genus()
              << "\n";
  } else if (*info) {
    const CatalogueEntry entry = CatalogueReport(LoadDessin(file));
    std::cout << (json ? entry.ToJson() + "\n" : entry.ToText());
  } else if (*dual) {
    std::cout << FormatDessinText(Dual(LoadDessin(file))) << "\n";
  } else if (*pdual) {
    const CleanDessin d = AsClean(LoadDessin(file));
    const EdgeSet s = EdgeSet::FromElements(edges);
    const CleanDessin result = PartialDualSet(d, s);
    std::cout << "# partial dual over " << s.ToString() << ", genus "
              << result.genus() << "\n"
              << FormatDessinText(result.dessin()) << "\n";
  } else if (*pdual_hyper) {
    const Dessin result = HypermapPartialDual(LoadDessin(file), cycle_index);
    std::cout << "# partial dual at alpha-cycle " << cycle_index << ", genus "
              << result.genus() << "\n"
              << FormatDessinText(result) << "\n";
  } else if (*delta) {
    const CleanDessin d = AsClean(LoadDessin(file));
    PrintDelta(oracle ? QuasiTreeOracle(d) : DeltaMatroidOfMap(d), json);
  } else if (*twist) {
    const CleanDessin d = AsClean(LoadDessin(file));
    PrintDelta(Twist(DeltaMatroidOfMap(d), EdgeSet::FromElements(twist_set)),
               json);
  } else if (*oneface) {
    const OneFaceWitness w = OneFacePartialDual(AsClean(LoadDessin(file)));
    std::cout << "# one-face partial dual over " << w.edges.ToString()
              << ", genus " << w.result.genus() << "\n"
              << FormatDessinText(w.result.dessin()) << "\n";
  } else if (*iso) {
    const Dessin a = LoadDessin(file);
    const Dessin b = LoadDessin(file2);
    if (auto g = FindIsomorphism(a, b)) {
      const std::string text = g->ToString();
      std::cout << "isomorphic: " << (text.empty() ? "identity" : text)
                << "\n";
    } else {
      std::cout << "not isomorphic\n";
    }
  } else if (*monograph || *tropical) {
    const CleanDessin d = AsClean(LoadDessin(file));
    const MonodromyGraph g =
        BuildMonodromyGraph(d, order.empty() ? DefaultOrder(d) : order);
    if (*monograph) {
      if (dot) {
        std::cout << ToDot(g);
      } else if (json) {
        std::cout << ToJson(g) << "\n";
      } else {
        PrintMonodromyText(g);
      }
    } else {
      const TropicalCurve t = ToTropicalCurve(g);
      if (dot) {
        std::cout << ToDot(t);
      } else if (json) {
        std::cout << ToJson(t) << "\n";
      } else {
        PrintTropicalText(t);
      }
    }
  } else if (*enumerate) {
    const std::vector<CleanDessin> maps = EnumerateCleanDessins(darts);
    for (size_t i = 0; i < maps.size(); ++i) {
      if (report && json) {
        std::cout << CatalogueReport(maps[i].dessin()).ToJson() << "\n";
        continue;
      }
      if (i > 0) std::cout << "\n";
      std::cout << "# map " << i + 1 << " of " << maps.size() << "\n";
      if (report) {
        std::cout << CatalogueReport(maps[i].dessin()).ToText();
      } else {
        std::cout << FormatDessinText(maps[i].dessin()) << "\n";
      }
    }
  }
  return 0;
}

}  // namespace
}  // namespace dessins

int main(int argc, char** argv) {
  try {
    return dessins::Run(argc, argv);
  } catch (const dessins::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dessins::kExitUsage;
  } catch (const dessins::DessinError& e) {
    std::cerr << "error: " << dessins::ErrorCodeName(e.code()) << ": "
              << e.what() << "\n";
    return dessins::kExitInvalid;
  }
}
