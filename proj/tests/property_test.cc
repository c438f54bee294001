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

// Randomized invariants tying the general toric machinery to the signed
// poset and type-A descriptions.

#include <gtest/gtest.h>

#include "signed_toric/class_group.h"
#include "signed_toric/conic.h"
#include "signed_toric/gorenstein.h"
#include "signed_toric/matroid.h"
#include "signed_toric/signed_poset.h"
#include "signed_toric/signed_weights.h"
#include "signed_toric/subset_sums.h"
#include "signed_toric/type_a.h"
#include "tests/support/oracles.h"

namespace signed_toric {
namespace {

using testing::Rng;

struct RandomPoset {
  BidirectedGraph graph;
  IntMatrix a;
  SignedWeights weights;
};

RandomPoset Draw(Rng* rng, size_t max_dim, size_t max_edges) {
  std::vector<IntVector> gens = testing::RandomSignedPosetGenerators(rng, max_dim, max_edges);
  BidirectedGraph g = HasseDiagram(gens.front().size(), gens);
  return {g, g.IncidenceMatrix(), ComputeSignedWeights(g)};
}

// The class of a = ceil(A^T y) for random rational y is conic, and its free
// part lies in the open region.
TEST(Property, CeilingsLandInOpenRegion) {
  Rng rng(71);
  std::uniform_int_distribution<long> numerator(-40, 40);
  for (int trial = 0; trial < 30; ++trial) {
    RandomPoset p = Draw(&rng, 4, 8);
    ConicPolytope region = ConicPolytopeSigned(p.graph, p.weights);
    const size_t d = p.a.rows(), n = p.a.cols();
    for (int sample = 0; sample < 10; ++sample) {
      std::vector<Rational> y(d);
      for (Rational& x : y) x = Rational(numerator(rng), 7);
      IntVector ceil(n);
      for (size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (size_t i = 0; i < d; ++i) s += p.a(i, j) * y[i];
        mpz_cdiv_q(ceil[j].get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
      }
      EXPECT_TRUE(IsConicClass(p.a, ceil));
      ClassElement c = p.weights.weights.Image(ceil);
      EXPECT_TRUE(Contains(region, c.free, Closure::kOpen)) << VectorToString(c.free);
    }
  }
}

// Every open lattice point, combined with every torsion value, is hit by
// some conic class; the count matches the subset formula.
TEST(Property, CountsAgreeAcrossRoutes) {
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    RandomPoset p = Draw(&rng, 4, 8);
    SubsetTable table = BuildSubsetTable(p.a);
    Integer formula = ConicCountFormula(table);
    EXPECT_EQ(Rational(formula), MultiplicityTutte(table, 1, 0));
    ConicPolytope region = ConicPolytopeSigned(p.graph, p.weights);
    Integer points = LatticePoints(region, Closure::kOpen).size();
    EXPECT_EQ(points * p.weights.weights.group.TorsionOrder(), formula);
    VectorConfig config(p.a.rows(), RootsOfGraph(p.graph));
    EXPECT_EQ(ConicCountEnumeration(config), formula);
  }
}

// The walk description and the general circuit description give the same
// region, dilate by dilate.
TEST(Property, WalkRegionEqualsCircuitRegion) {
  Rng rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    RandomPoset p = Draw(&rng, 4, 7);
    ConicPolytope walks = ConicPolytopeSigned(p.graph, p.weights);
    ConicPolytope general = ComputeConicPolytope(Circuits(VectorConfig(p.a.rows(), RootsOfGraph(p.graph))),
                                                 p.weights.weights);
    EXPECT_EQ(LatticePoints(walks, Closure::kOpen), LatticePoints(general, Closure::kOpen));
    for (int t = 1; t <= 2; ++t) {
      EXPECT_EQ(LatticePoints(walks, Closure::kClosed, t),
                LatticePoints(general, Closure::kClosed, t));
    }
  }
}

TEST(Property, EhrhartMatchesDilatesAndReciprocity) {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    RandomPoset p = Draw(&rng, 4, 7);
    if (p.weights.weights.group.free_rank == 0) continue;
    std::vector<Rational> c = EhrhartGaleZonotope(p.a);
    ConicPolytope region = ConicPolytopeSigned(p.graph, p.weights);
    for (int t = 1; t <= 2; ++t) {
      EXPECT_EQ(EvaluatePolynomial(c, t), LatticePoints(region, Closure::kClosed, t).size());
    }
    Rational sign = p.weights.weights.group.free_rank % 2 == 0 ? 1 : -1;
    EXPECT_EQ(sign * EvaluatePolynomial(c, -1), LatticePoints(region, Closure::kOpen).size());
  }
}

TEST(Property, BalancedReductionPreservesEverything) {
  Rng rng(89);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<IntVector> gens = testing::RandomBalancedGenerators(&rng, 5, 8);
    BidirectedGraph g = HasseDiagram(gens.front().size(), gens);
    TypeAReduction r = ToTypeA(g);
    EXPECT_TRUE(IsTypeA(r.reduced));
    EXPECT_EQ(ClassGroupSigned(g), ClassGroupSigned(r.reduced));
    EXPECT_EQ(ConicCountFormula(g.IncidenceMatrix()),
              ConicCountFormula(r.reduced.IncidenceMatrix()));
    EXPECT_EQ(GorensteinByWalks(g).verdict, GorensteinByWalks(r.reduced).verdict);
  }
}

}  // namespace
}  // namespace signed_toric
