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

#include "signed_toric/class_group.h"
#include "signed_toric/conic.h"
#include "signed_toric/errors.h"
#include "signed_toric/matroid.h"
#include "signed_toric/normal_form.h"
#include "signed_toric/subset_sums.h"
#include "signed_toric/vector_config.h"
#include "tests/support/examples.h"
#include "tests/support/oracles.h"

namespace signed_toric {
namespace {

using testing::Rng;

VectorConfig Gale() { return VectorConfig(4, testing::GaleExampleVectors()); }

std::vector<std::string> FacetStrings(const ConicPolytope& p) {
  std::vector<std::string> out;
  for (const Facet& f : p.facets) out.push_back(f.ToString());
  return out;
}

TEST(ClassGroup, ToString) {
  EXPECT_EQ((ClassGroup{3, {}}).ToString(), "Z^3");
  EXPECT_EQ((ClassGroup{2, ToIntVector({2})}).ToString(), "Z^2 x Z/2");
  EXPECT_EQ((ClassGroup{0, {}}).ToString(), "0");
}

TEST(ClassGroup, GaleExampleIsFreeOfRankTwo) {
  EXPECT_EQ(ComputeClassGroup(Gale()), (ClassGroup{2, {}}));
}

TEST(ClassGroup, TorsionFromCokernel) {
  // Z^2 / im([[1, 1], [1, -1]]) has order 2.
  IntMatrix a{{1, 1}, {1, -1}};
  ClassGroup g = ComputeClassGroup(a);
  EXPECT_EQ(g.free_rank, 0u);
  EXPECT_EQ(g.torsion, ToIntVector({2}));
  WeightSystem w = ComputeWeightSystem(a);
  EXPECT_TRUE(VerifyExactness(a, w));
}

TEST(Weights, GaleExampleWithChosenKernel) {
  IntMatrix k = testing::GaleExampleKernel();
  WeightSystem w = ComputeWeightSystem(Gale(), &k);
  const long expected[6][2] = {{1, 0}, {0, 1}, {-1, -1}, {1, 0}, {0, 1}, {-1, -1}};
  for (size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(w.Weight(i).free, ToIntVector({expected[i][0], expected[i][1]}));
  }
  EXPECT_TRUE(VerifyExactness(Gale().matrix(), w));
}

TEST(Weights, ExactnessDetectsBrokenWeights) {
  WeightSystem w = ComputeWeightSystem(Gale());
  w.free_part(0, 0) += 1;
  std::string why;
  EXPECT_FALSE(VerifyExactness(Gale().matrix(), w, &why));
  EXPECT_FALSE(why.empty());
}

TEST(Weights, ExactnessOnRandomMatrices) {
  Rng rng(31);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    size_t rows = 1 + rng() % 3, cols = 2 + rng() % 4;
    IntMatrix a(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
    }
    WeightSystem w = ComputeWeightSystem(a);
    std::string why;
    EXPECT_TRUE(VerifyExactness(a, w, &why)) << a.ToString() << why;
    EXPECT_EQ(w.group, ComputeClassGroup(a));
    // Order of the torsion equals the gcd of maximal minors of A^T when A
    // has full row rank.
    if (testing::RationalRank(a) == rows) {
      EXPECT_EQ(w.group.TorsionOrder(), testing::MinorGcdByMinors(a, rows));
    }
  }
}

TEST(Conic, GaleExampleFacets) {
  IntMatrix k = testing::GaleExampleKernel();
  WeightSystem w = ComputeWeightSystem(Gale(), &k);
  ConicPolytope p = ComputeConicPolytope(Gale(), w);
  std::vector<std::string> expected = {"-2 < z1 - z2 < 2", "-2 < z1 < 2",
                                       "-2 < z2 < 2"};
  EXPECT_EQ(FacetStrings(p), expected);
}

TEST(Conic, GaleExampleCountBySeveralRoutes) {
  VectorConfig v = Gale();
  EXPECT_EQ(ConicCountEnumeration(v), 7);
  EXPECT_EQ(ConicCountFormula(v.matrix()), 7);
  EXPECT_EQ(MultiplicityTutte(v.matrix(), 1, 0), 7);
  IntMatrix k = testing::GaleExampleKernel();
  ConicPolytope p = ComputeConicPolytope(v, ComputeWeightSystem(v, &k));
  std::vector<IntVector> fs;
  std::vector<std::pair<Integer, Integer>> bounds;
  for (const Facet& f : p.facets) {
    fs.push_back(f.functional);
    bounds.push_back({f.lower, f.upper});
  }
  EXPECT_EQ(testing::BoxCount(fs, bounds, true, 1, 4), 7u);
  EXPECT_EQ(LatticePoints(p, Closure::kOpen).size(), 7u);
}

TEST(Conic, ReduceFacetsKeepsRegion) {
  VectorConfig v = Gale();
  ConicPolytope p = ComputeConicPolytope(v, ComputeWeightSystem(v));
  ConicPolytope r = ReduceFacets(p);
  EXPECT_LE(r.facets.size(), p.facets.size());
  for (int t = 1; t <= 2; ++t) {
    EXPECT_EQ(LatticePoints(p, Closure::kClosed, t), LatticePoints(r, Closure::kClosed, t));
  }
  EXPECT_EQ(LatticePoints(p, Closure::kOpen), LatticePoints(r, Closure::kOpen));
}

TEST(Conic, UnboundedRegionIsReported) {
  ConicPolytope p;
  p.ambient_dim = 2;
  p.facets.push_back({ToIntVector({1, 0}), -1, 1, 0});
  EXPECT_THROW(LatticePoints(p, Closure::kOpen), InvariantFailure);
}

TEST(Conic, ConicClassesAreCeilings) {
  IntMatrix a = Gale().matrix();
  // a = ceil(A^T x) for x = (1/2, 0, 0, 0).
  EXPECT_TRUE(IsConicClass(a, ToIntVector({1, 0, 0, 0, 0, 0})));
  // Entries 1 and 4 force x4 > 0, yet entry 6 needs x4 - x3 <= -5 with x3 <= 0.
  EXPECT_FALSE(IsConicClass(a, ToIntVector({1, 0, 0, 1, 0, -5})));
}

TEST(Ehrhart, GaleZonotopeDilatesAndReciprocity) {
  VectorConfig v = Gale();
  std::vector<Rational> c = EhrhartGaleZonotope(v.matrix());
  IntMatrix k = testing::GaleExampleKernel();
  ConicPolytope p = ComputeConicPolytope(v, ComputeWeightSystem(v, &k));
  for (int t = 1; t <= 3; ++t) {
    EXPECT_EQ(EvaluatePolynomial(c, t), LatticePoints(p, Closure::kClosed, t).size());
  }
  // (-1)^dim L(-1) counts the interior points.
  EXPECT_EQ(EvaluatePolynomial(c, -1), 7);
  EXPECT_EQ(EvaluatePolynomial(c, 0), 1);
}

TEST(Ehrhart, PolynomialToString) {
  std::vector<Rational> c = {1, Rational(1, 2), 3};
  EXPECT_EQ(PolynomialToString(c), "3*t^2 + 1/2*t + 1");
}

TEST(SubsetSums, LimitIsEnforced) {
  EXPECT_THROW(BuildSubsetTable(Gale().matrix(), 5), LimitExceeded);
}

}  // namespace
}  // namespace signed_toric
