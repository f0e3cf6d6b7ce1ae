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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dessins/catalogue.h"
#include "dessins/delta_matroid.h"
#include "dessins/dessin.h"
#include "dessins/monodromy.h"
#include "dessins/partial_dual.h"
#include "dessins/text_format.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"

namespace dessins {
namespace {

using ::dessins::testing::AllSubsets;
using ::dessins::testing::P;
using ::dessins::testing::SmallMaps;

// Collects the first mismatch of a criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

void DigonPartialDual(Check& c) {
  const Dessin d = ParseDessinText(
      "n = 4\nsigma = (1 4)(2 3)\nalpha = (1 2)(3 4)\nphi = (1 3)(2 4)");
  const CleanDessin r = PartialDualSet(AsClean(d), {1});
  c.Expect(r.sigma() == P("(1 4 2 3)", 4), "sigma' = " + r.sigma().ToString());
  c.Expect(r.alpha() == d.alpha(), "alpha changed");
  c.Expect(r.genus() == 1, "genus");
  c.Expect(r.phi() == P("(1 2)", 4) * d.phi(), "phi' != c_1 phi");
  c.Expect(r.phi().CycleType() == std::vector<int>{4}, "phi' cycle type");
  c.Expect(r.phi() == Inverse(P("(1 3 2 4)", 4)), "phi' vs printed inverse");
}

void Symmetric5Passport(Check& c) {
  const Dessin d =
      ParseDessinText("n = 5\nsigma = (2 3 4)\nalpha = (1 2)(3 5 4)");
  c.Expect(PassportOf(d).ToString() == "[3 1^2, 3 2, 4 1]", "passport");
  c.Expect(MonodromyOrder(d) == 120u, "order");
}

void CyclicHypermapDual(Check& c) {
  const Dessin d = testing::Cyclic6();
  c.Expect(MonodromyOrder(d) == 6u, "order");
  c.Expect(MonodromyIsAbelian(d), "abelian");
  // Cycle (1 3 5) is the first alpha-cycle.
  c.Expect(d.alpha().Cycles()[0] == Cycle{1, 3, 5}, "cycle index");
  const Dessin r = HypermapPartialDual(d, 1);
  c.Expect(!MonodromyIsAbelian(r), "partial dual abelian");
  c.Expect(r.sigma() == P("(1 2 3 4 5 6)", 6), "sigma'");
}

void TwistLaw(Check& c) {
  for (const CleanDessin& m : SmallMaps()) {
    const DeltaMatroid delta = DeltaMatroidOfMap(m);
    for (EdgeSet s : AllSubsets(m.edge_count())) {
      c.Expect(DeltaMatroidOfMap(PartialDualSet(m, s)) == Twist(delta, s),
               FormatDessinText(m.dessin()) + " S=" + s.ToString());
    }
  }
}

void OracleAgreement(Check& c) {
  for (const CleanDessin& m : SmallMaps()) {
    c.Expect(DeltaMatroidOfMap(m) == QuasiTreeOracle(m),
             FormatDessinText(m.dessin()));
  }
  std::mt19937 rng(2026);
  for (int i = 0; i < 50; ++i) {
    const CleanDessin m = testing::RandomMap(8, rng);
    c.Expect(DeltaMatroidOfMap(m) == QuasiTreeOracle(m),
             FormatDessinText(m.dessin()));
  }
}

void DualDeltaLaw(Check& c) {
  for (const CleanDessin& m : SmallMaps()) {
    c.Expect(DualDeltaMatroid(DeltaMatroidOfMap(m)) ==
                 DeltaMatroidOfMap(AsClean(Dual(m.dessin()))),
             FormatDessinText(m.dessin()));
  }
}

void PartialDualLaws(Check& c) {
  for (const CleanDessin& m : SmallMaps()) {
    const int e = m.edge_count();
    c.Expect(PartialDualSet(m, EdgeSet::Full(e)).dessin() == Dual(m.dessin()),
             "full partial dual");
    for (EdgeSet s : AllSubsets(e)) {
      const CleanDessin ds = PartialDualSet(m, s);
      c.Expect(PartialDualSet(ds, s) == m, "involution");
      c.Expect(ds.genus() == PartialDualSet(m, s.Complement(e)).genus(),
               "complement genus");
      for (EdgeSet t : AllSubsets(e)) {
        c.Expect(PartialDualSet(ds, t) ==
                     PartialDualSet(m, s.SymmetricDifference(t)),
                 "composition");
      }
    }
  }
}

void Whitney(Check& c) {
  for (const CleanDessin& m : SmallMaps()) {
    const DeltaMatroid delta = DeltaMatroidOfMap(m);
    c.Expect(IsMatroid(delta) == (m.genus() == 0),
             FormatDessinText(m.dessin()));
    if (m.genus() != 0) continue;
    std::vector<EdgeSet> trees;
    for (const auto& t : SpanningTrees(MapGraph(m))) {
      trees.push_back(EdgeSet::FromElements(t));
    }
    c.Expect(delta == DeltaMatroid::Create(m.edge_count(), trees),
             "trees " + FormatDessinText(m.dessin()));
  }
}

void OneFaceWitnesses(Check& c) {
  for (const CleanDessin& m : SmallMaps()) {
    const OneFaceWitness w = OneFacePartialDual(m);
    c.Expect(w.result.phi().CycleCount() == 1, FormatDessinText(m.dessin()));
    c.Expect(w.result == PartialDualSet(m, w.edges), "witness mismatch");
  }
}

void AbelianInvariance(Check& c) {
  for (const CleanDessin& m : SmallMaps()) {
    const bool abelian = MonodromyIsAbelian(m.dessin());
    for (EdgeSet s : AllSubsets(m.edge_count())) {
      c.Expect(MonodromyIsAbelian(PartialDualSet(m, s).dessin()) == abelian,
               FormatDessinText(m.dessin()) + " S=" + s.ToString());
    }
  }
}

int CoreEdgeCount(const Multigraph& g) {
  std::vector<int> degree(g.vertex_count, 0);
  for (const auto& [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<bool> removed(g.edges.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const auto [a, b] = g.edges[i];
      if (!removed[i] && a != b && (degree[a] == 1 || degree[b] == 1)) {
        removed[i] = true;
        --degree[a];
        --degree[b];
        changed = true;
      }
    }
  }
  return static_cast<int>(std::count(removed.begin(), removed.end(), false));
}

void OctagonMonodromyGraphs(Check& c) {
  const CleanDessin m = testing::Octagon();
  const MonodromyGraph g = BuildMonodromyGraph(m, {1, 2, 3, 4});
  c.Expect(g.vertices.size() == 8 && g.edges.size() == 8, "counts");
  c.Expect(BettiNumber(g) == 1, "betti");
  bool double_edge = false;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      double_edge |= std::minmax(g.edges[i].from, g.edges[i].to) ==
                     std::minmax(g.edges[j].from, g.edges[j].to);
    }
  }
  c.Expect(double_edge, "no double edge");
  const MonodromyGraph h = BuildMonodromyGraph(m, {1, 3, 2, 4});
  c.Expect(BettiNumber(h) == 1 && CoreEdgeCount(h.AsMultigraph()) == 3,
           "no 3-cycle");
  c.Expect(!MultigraphIsomorphic(g.AsMultigraph(), h.AsMultigraph()),
           "isomorphic");
}

void BettiGenus(Check& c) {
  for (const CleanDessin& m : SmallMaps()) {
    std::vector<int> order(m.edge_count());
    for (int i = 0; i < m.edge_count(); ++i) order[i] = i + 1;
    do {
      c.Expect(BettiNumber(BuildMonodromyGraph(m, order)) == m.genus(),
               FormatDessinText(m.dessin()));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

void TorusThreeSetFamily(Check& c) {
  const DeltaMatroid target =
      DeltaMatroid::Create(3, {{1, 2, 3}, {1}, {3}});
  bool found = false;
  for (const CleanDessin& m : EnumerateCleanDessins(6)) {
    if (m.genus() == 1 && m.sigma().CycleCount() == 2 &&
        m.phi().CycleCount() == 1 &&
        DeltaIsomorphic(DeltaMatroidOfMap(m), target)) {
      found = true;
    }
  }
  c.Expect(found, "no matching map");
}

void Symmetric5Trees(Check& c) {
  const auto trees = SpanningTrees(UnderlyingGraph(testing::Symmetric5()));
  c.Expect(trees == std::vector<std::vector<int>>{{1, 2, 3, 5}, {1, 2, 4, 5}},
           "spanning trees");
}

void PlaneTrees(Check& c) {
  int seen = 0;
  for (const CleanDessin& m : SmallMaps()) {
    if (m.genus() != 0 || m.phi().CycleCount() != 1) continue;
    ++seen;
    c.Expect(DeltaMatroidOfMap(m) ==
                 DeltaMatroid::Create(m.edge_count(),
                                      {EdgeSet::Full(m.edge_count())}),
             FormatDessinText(m.dessin()));
  }
  c.Expect(seen > 0, "no trees enumerated");
}

void EnumerationCounts(Check& c) {
  c.Expect(EnumerateCleanDessins(2).size() == 2, "n=2");
  c.Expect(EnumerateCleanDessins(4).size() == 5, "n=4");
  c.Expect(testing::BruteForceMapClassCount(2) == 2, "brute n=2");
  c.Expect(testing::BruteForceMapClassCount(4) == 5, "brute n=4");
}

struct Criterion {
  const char* name;
  std::function<void(Check&)> run;
};

int Main() {
  const std::vector<Criterion> criteria{
      {"digon single-edge partial dual", DigonPartialDual},
      {"S5 hypermap passport and order", Symmetric5Passport},
      {"cyclic hypermap partial dual loses abelianness", CyclicHypermapDual},
      {"partial duality twists the delta-matroid", TwistLaw},
      {"face-count scan agrees with quasi-tree oracle", OracleAgreement},
      {"dual delta-matroid of dual map", DualDeltaLaw},
      {"partial duality laws", PartialDualLaws},
      {"matroid iff plane, feasible sets are spanning trees", Whitney},
      {"one-face partial dual exists", OneFaceWitnesses},
      {"abelian monodromy invariant under partial duality", AbelianInvariance},
      {"octagon monodromy graphs", OctagonMonodromyGraphs},
      {"Betti number equals genus", BettiGenus},
      {"torus map with family {123,1,3}", TorusThreeSetFamily},
      {"S5 hypermap spanning trees", Symmetric5Trees},
      {"plane trees have one feasible set", PlaneTrees},
      {"enumeration counts", EnumerationCounts},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    if (check.ok()) {
      std::printf("PASS %2zu %s\n", i + 1, criteria[i].name);
    } else {
      ++failures;
      std::printf("FAIL %2zu %s: %s\n", i + 1, criteria[i].name,
                  check.failure().c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace dessins

int main() { return dessins::Main(); }
