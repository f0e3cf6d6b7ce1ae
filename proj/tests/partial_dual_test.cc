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

#include <vector>

#include "dessins/delta_matroid.h"
#include "dessins/error.h"
#include "gtest/gtest.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"

namespace dessins {
namespace {

using ::dessins::testing::MakeDessin;
using ::dessins::testing::P;

TEST(PartialDualTest, SingleEdge) {
  const CleanDessin d = PartialDualEdge(testing::Digon(), 1);
  EXPECT_EQ(d.sigma(), P("(1 4 2 3)", 4));
  EXPECT_EQ(d.alpha(), P("(1 2)(3 4)", 4));
  EXPECT_EQ(d.genus(), 1);
  // c_1 phi under left-to-right composition.
  EXPECT_EQ(d.phi(), P("(1 4 2 3)", 4));
  EXPECT_EQ(d.phi(), Inverse(P("(1 3 2 4)", 4)));
  EXPECT_EQ(d.phi().CycleType(), (std::vector<int>{4}));
}

TEST(PartialDualTest, Involution) {
  const CleanDessin digon = testing::Digon();
  EXPECT_EQ(PartialDualEdge(PartialDualEdge(digon, 1), 1), digon);
}

TEST(PartialDualTest, LoopBecomesSegment) {
  const CleanDessin d = PartialDualEdge(testing::Loop(), 1);
  EXPECT_TRUE(d.sigma().IsIdentity());
  EXPECT_EQ(d.phi(), P("(1 2)", 2));
  EXPECT_EQ(d.dessin(), Dual(testing::Loop().dessin()));
}

TEST(PartialDualTest, Sets) {
  const CleanDessin digon = testing::Digon();
  EXPECT_EQ(PartialDualSet(digon, {}), digon);
  EXPECT_EQ(PartialDualSet(digon, {1, 2}).dessin(), Dual(digon.dessin()));
  const CleanDessin two = PartialDualSet(digon, {2});
  EXPECT_EQ(two.sigma(), P("(1 3 2 4)", 4));
  EXPECT_EQ(two.phi().CycleCount(), 1);
  EXPECT_EQ(two.genus(), 1);
}

TEST(PartialDualTest, RejectsOutOfRangeEdges) {
  try {
    PartialDualSet(testing::Digon(), {3});
    FAIL();
  } catch (const DessinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  EXPECT_THROW(PartialDualEdge(testing::Digon(), 0), DessinError);
}

TEST(PartialDualTest, Hypermap) {
  const Dessin d = HypermapPartialDual(testing::Cyclic6(), 1);
  EXPECT_EQ(d.sigma(), P("(1 2 3 4 5 6)", 6));
  EXPECT_EQ(d.alpha(), P("(1 5 3)(2 4 6)", 6));
  EXPECT_EQ(d.phi(), P("(1 2 5 6 3 4)", 6));
  EXPECT_EQ(d.genus(), 2);
  EXPECT_FALSE(MonodromyIsAbelian(d));
  EXPECT_TRUE(MonodromyIsAbelian(testing::Cyclic6()));
  EXPECT_THROW(HypermapPartialDual(testing::Cyclic6(), 3), DessinError);
}

TEST(PartialDualTest, HypermapAgreesOnMaps) {
  for (const CleanDessin& m : testing::SmallMaps()) {
    for (int j = 1; j <= m.edge_count(); ++j) {
      EXPECT_EQ(HypermapPartialDual(m.dessin(), j),
                PartialDualEdge(m, j).dessin());
    }
  }
}

TEST(PartialDualTest, OneFace) {
  const OneFaceWitness digon = OneFacePartialDual(testing::Digon());
  EXPECT_EQ(digon.edges, (EdgeSet{2}));
  EXPECT_EQ(digon.result.phi().CycleCount(), 1);

  const OneFaceWitness loop = OneFacePartialDual(testing::Loop());
  EXPECT_EQ(loop.edges, (EdgeSet{1}));
  EXPECT_EQ(loop.result.phi().CycleCount(), 1);

  const CleanDessin theta = testing::ThetaTorus();
  ASSERT_EQ(theta.phi().CycleCount(), 1);
  const OneFaceWitness same = OneFacePartialDual(theta);
  EXPECT_TRUE(same.edges.empty());
  EXPECT_EQ(same.result, theta);
}

TEST(PartialDualPropertyTest, MatchesSequentialDefinition) {
  for (const CleanDessin& m : testing::SmallMaps()) {
    for (EdgeSet s : testing::AllSubsets(m.edge_count())) {
      EXPECT_EQ(PartialDualSet(m, s).dessin(),
                testing::PartialDualByEdges(m, s.Elements()));
    }
  }
}

TEST(PartialDualPropertyTest, DualityLaws) {
  for (const CleanDessin& m : testing::SmallMaps()) {
    const int e = m.edge_count();
    EXPECT_EQ(PartialDualSet(m, EdgeSet::Full(e)).dessin(), Dual(m.dessin()));
    const bool abelian = MonodromyIsAbelian(m.dessin());
    for (EdgeSet s : testing::AllSubsets(e)) {
      const CleanDessin ds = PartialDualSet(m, s);
      EXPECT_EQ(PartialDualSet(ds, s), m);
      EXPECT_EQ(ds.genus(), PartialDualSet(m, s.Complement(e)).genus());
      EXPECT_EQ(MonodromyIsAbelian(ds.dessin()), abelian);
      EXPECT_TRUE(IsTransitive(
          std::vector<Permutation>{ds.sigma(), ds.alpha()}, ds.n_darts()));
      for (EdgeSet t : testing::AllSubsets(e)) {
        EXPECT_EQ(PartialDualSet(ds, t), PartialDualSet(m, s.SymmetricDifference(t)));
      }
    }
  }
}

TEST(PartialDualPropertyTest, OneFaceWitnessAlwaysExists) {
  for (const CleanDessin& m : testing::SmallMaps()) {
    const OneFaceWitness w = OneFacePartialDual(m);
    EXPECT_EQ(w.result.phi().CycleCount(), 1);
    EXPECT_EQ(w.result, PartialDualSet(m, w.edges));
  }
}

}  // namespace
}  // namespace dessins
