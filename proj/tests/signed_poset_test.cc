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

#include <gtest/gtest.h>

#include <set>

#include "signed_toric/errors.h"
#include "signed_toric/feasibility.h"
#include "signed_toric/matroid.h"
#include "signed_toric/signed_poset.h"
#include "signed_toric/signed_weights.h"
#include "tests/support/examples.h"
#include "tests/support/oracles.h"

namespace signed_toric {
namespace {

using testing::Root;
using testing::Roots;
using testing::Rng;

TEST(Roots, TypeBRootSystem) {
  EXPECT_EQ(AllBRoots(1).size(), 2u);
  EXPECT_EQ(AllBRoots(3).size(), 18u);
  EXPECT_TRUE(IsBRoot(ToIntVector({1, -1, 0})));
  EXPECT_FALSE(IsBRoot(ToIntVector({1, 1, 1})));
  EXPECT_FALSE(IsBRoot(ToIntVector({2, 0})));
  EXPECT_EQ(RootToString(Root(3, {1, -2})), "+x1-x2");
  EXPECT_EQ(RootToString(Root(3, {-3})), "-x3");
}

TEST(SignedPoset, RejectsNonRootsAndDuplicates) {
  EXPECT_THROW(SignedPoset(2, {ToIntVector({1, 1, 0})}), ValidationError);
  EXPECT_THROW(SignedPoset(2, {Root(2, {1}), Root(2, {1})}), ValidationError);
}

TEST(Closure, AddsGeneratedRoots) {
  // x1 - x2 and x2 - x3 generate x1 - x3.
  SignedPoset p = CloseUp(SignedPoset(3, Roots(3, {{1, -2}, {2, -3}})));
  std::set<IntVector> have(p.roots().begin(), p.roots().end());
  EXPECT_EQ(have.size(), 3u);
  EXPECT_TRUE(have.count(Root(3, {1, -3})));
}

TEST(Closure, HalfRootsFromOrdinaryPair) {
  // (x1 + x2) + (x1 - x2) = 2 x1, so x1 is in the closure.
  SignedPoset p = CloseUp(SignedPoset(2, Roots(2, {{1, 2}, {1, -2}})));
  std::set<IntVector> have(p.roots().begin(), p.roots().end());
  EXPECT_TRUE(have.count(Root(2, {1})));
  EXPECT_TRUE(ValidatePoset(p).valid);
}

TEST(Validate, ReportsMissingClosureAndAntisymmetry) {
  PosetDiagnostics d = ValidatePoset(SignedPoset(3, Roots(3, {{1, -2}, {2, -3}})));
  EXPECT_FALSE(d.valid);
  ASSERT_EQ(d.problems.size(), 1u);
  EXPECT_NE(d.problems[0].find("+x1-x3"), std::string::npos);
  PosetDiagnostics e = ValidatePoset(SignedPoset(2, Roots(2, {{1}, {-1}})));
  EXPECT_FALSE(e.valid);
  EXPECT_NE(e.problems[0].find("antisymmetry"), std::string::npos);
}

TEST(Extremal, DropsGeneratedRoots) {
  SignedPoset p = CloseUp(SignedPoset(2, Roots(2, {{1, 2}, {1, -2}})));
  VectorConfig tilde = ExtremalGenerators(p);
  EXPECT_EQ(tilde.vectors(), Roots(2, {{1, 2}, {1, -2}}));
}

TEST(Extremal, Figure1PosetRoundTrips) {
  std::vector<IntVector> roots = testing::Figure1Roots();
  SignedPoset p = CloseUp(SignedPoset(4, roots));
  EXPECT_TRUE(ValidatePoset(p).valid);
  VectorConfig tilde = ExtremalGenerators(p);
  EXPECT_EQ(tilde.vectors(), roots);
  BidirectedGraph g = HasseDiagram(tilde);
  EXPECT_EQ(RootsOfGraph(g), roots);
  EXPECT_TRUE(g.edge(0).is_halfedge());
  EXPECT_EQ(g.edge(4).Sign(), -1);
}

TEST(Extremal, ClosureOfExtremalsRecoversPoset) {
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntVector> gens = testing::RandomSignedPosetGenerators(&rng, 4, 10);
    size_t d = gens.front().size();
    SignedPoset p = CloseUp(SignedPoset(d, gens));
    EXPECT_TRUE(ValidatePoset(p).valid);
    // Every root of P lies in the cone of its extremal generators.
    for (const IntVector& r : p.roots()) EXPECT_TRUE(ConeCoefficients(gens, r).has_value());
    VectorConfig again = ExtremalGenerators(p);
    EXPECT_EQ(std::set<IntVector>(again.vectors().begin(), again.vectors().end()),
              std::set<IntVector>(gens.begin(), gens.end()));
    EXPECT_TRUE(IsStronglyConvex(again));
  }
}

TEST(Examples, P1AndP2AreTheirOwnExtremalGenerators) {
  for (const BidirectedGraph& g : {testing::P1Graph(), testing::P2Graph()}) {
    std::vector<IntVector> roots = RootsOfGraph(g);
    SignedPoset p = CloseUp(SignedPoset(4, roots));
    EXPECT_TRUE(ValidatePoset(p).valid);
    EXPECT_EQ(ExtremalGenerators(p).vectors(), roots);
  }
}

TEST(GraphPoset, K3AndC4) {
  SignedPoset k3 = GraphPoset({3, {{0, 1}, {1, 2}, {0, 2}}});
  EXPECT_EQ(k3.roots(), Roots(3, {{1, 2}, {2, 3}, {1, 3}}));
  BidirectedGraph g = HasseDiagram(3, k3.roots());
  EXPECT_EQ(ClassGroupSigned(g).ToString(), "Z/2");
  SignedPoset c4 = GraphPoset({4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}});
  EXPECT_EQ(ClassGroupSigned(HasseDiagram(4, c4.roots())).ToString(), "Z^1");
}

TEST(GraphPoset, RejectsLoopsAndRepeats) {
  EXPECT_THROW(GraphPoset({2, {{0, 0}}}), ValidationError);
  EXPECT_THROW(GraphPoset({2, {{0, 1}, {1, 0}}}), ValidationError);
}

TEST(Decompose, SplitsComponents) {
  std::vector<IntVector> roots = Roots(4, {{1, -2}, {3}, {4, 3}});
  SignedPoset p = CloseUp(SignedPoset(4, roots));
  std::vector<SignedPoset> parts = Decompose(p);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].dim(), 2u);
  EXPECT_EQ(parts[0].roots(), Roots(2, {{1, -2}}));
  EXPECT_EQ(parts[1].dim(), 2u);
  EXPECT_TRUE(ValidatePoset(parts[1]).valid);
}

TEST(Decompose, IsolatedVerticesAreComponents) {
  BidirectedGraph g = HasseDiagram(3, Roots(3, {{1, -2}}));
  std::vector<PosetComponent> cs = DecomposeGraph(g);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[1].vertices, std::vector<int>{2});
  EXPECT_TRUE(cs[1].edges.empty());
}

}  // namespace
}  // namespace signed_toric
