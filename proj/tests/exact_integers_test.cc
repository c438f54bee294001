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

#include <algorithm>

#include "signed_toric/errors.h"
#include "signed_toric/feasibility.h"
#include "signed_toric/normal_form.h"
#include "signed_toric/signed_poset.h"
#include "signed_toric/signed_weights.h"
#include "tests/support/examples.h"
#include "tests/support/oracles.h"

namespace signed_toric {
namespace {

using testing::Rng;

IntMatrix RandomMatrix(Rng* rng, size_t rows, size_t cols, long range) {
  std::uniform_int_distribution<long> entry(-range, range);
  IntMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m(i, j) = entry(*rng);
  }
  return m;
}

// Low-rank matrices come from products of thin factors.
IntMatrix RandomLowRank(Rng* rng, size_t rows, size_t cols) {
  size_t r = std::uniform_int_distribution<size_t>(0, std::min(rows, cols))(*rng);
  return RandomMatrix(rng, rows, r, 2) * RandomMatrix(rng, r, cols, 2);
}

TEST(SmithNormalForm, Identity) {
  SnfResult s = SmithNormalForm(IntMatrix::Identity(2));
  EXPECT_EQ(s.diagonal, ToIntVector({1, 1}));
}

TEST(SmithNormalForm, CoprimeDiagonal) {
  SnfResult s = SmithNormalForm(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.diagonal, ToIntVector({1, 6}));
}

TEST(SmithNormalForm, TransformsReconstructInput) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix m = trial % 2 ? RandomMatrix(&rng, rows, cols, 6) : RandomLowRank(&rng, rows, cols);
    SnfResult s = SmithNormalForm(m);
    IntMatrix d = s.DiagonalMatrix(rows, cols);
    EXPECT_EQ(s.left_transform * m * s.right_transform, d);
    EXPECT_EQ(abs(testing::LaplaceDeterminant(s.left_transform)), 1);
    EXPECT_EQ(abs(testing::LaplaceDeterminant(s.right_transform)), 1);
    EXPECT_EQ(UnimodularInverse(s.left_transform) * d *
                  UnimodularInverse(s.right_transform),
              m);
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      if (s.diagonal[i + 1] != 0) {
        EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
      }
      EXPECT_GE(s.diagonal[i], 0);
    }
  }
}

TEST(SmithNormalForm, SignedTreeTransposeHasUnitFactors) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + rng() % 5;
    std::vector<BiEdge> edges;
    for (int v = 1; v < d; ++v) {
      int u = rng() % v;
      int tu = rng() % 2 ? 1 : -1, tv = rng() % 2 ? 1 : -1;
      edges.push_back(BiEdge::Ordinary(u, tu, v, tv));
    }
    IntMatrix a = BidirectedGraph(d, edges).IncidenceMatrix();
    SnfResult s = SmithNormalForm(a.Transpose());
    for (const Integer& x : s.diagonal) EXPECT_EQ(x, 1);
    EXPECT_EQ(Rank(a), static_cast<size_t>(d - 1));
    EXPECT_EQ(testing::RationalRank(a), static_cast<size_t>(d - 1));
  }
}

TEST(MinorGcd, ZeroOrderIsOne) {
  EXPECT_EQ(MinorGcd(IntMatrix{{4, 6}}, 0), 1);
  EXPECT_EQ(MinorGcd(IntMatrix(0, 0), 0), 1);
}

TEST(MinorGcd, IdentityTopOrder) { EXPECT_EQ(MinorGcd(IntMatrix::Identity(2), 2), 1); }

TEST(MinorGcd, PseudoTreeOfNegativeCircle) {
  BidirectedGraph g = testing::P2Graph();
  IntMatrix forest = g.IncidenceMatrix().SelectColumns(testing::P2Forest());
  EXPECT_EQ(MinorGcd(forest, 4), 2);
}

TEST(MinorGcd, MatchesMinorEnumeration) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m = trial % 2 ? RandomMatrix(&rng, rows, cols, 5) : RandomLowRank(&rng, rows, cols);
    for (size_t i = 0; i <= std::min(rows, cols) + 1; ++i) {
      Integer expected = i > std::min(rows, cols) ? Integer(0)
                                                  : testing::MinorGcdByMinors(m, i);
      EXPECT_EQ(MinorGcd(m, i), expected) << m.ToString() << " i=" << i;
    }
  }
}

TEST(Rank, ZeroMatrix) { EXPECT_EQ(Rank(IntMatrix(3, 4)), 0u); }

TEST(Rank, Figure1Matrix) {
  IntMatrix a = HasseDiagram(4, testing::Figure1Roots()).IncidenceMatrix();
  IntMatrix printed{{1, -1, 0, 0, 0, 1},
                    {0, 1, 1, 1, 0, 0},
                    {0, 0, 1, -1, -1, 0},
                    {0, 0, 0, 0, -1, -1}};
  EXPECT_EQ(a, printed);
  EXPECT_EQ(Rank(a), 4u);
}

TEST(Rank, MatchesGaussianElimination) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = RandomLowRank(&rng, 1 + rng() % 5, 1 + rng() % 5);
    EXPECT_EQ(Rank(m), testing::RationalRank(m));
  }
}

TEST(Determinant, MatchesLaplace) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = rng() % 5;
    IntMatrix m = RandomMatrix(&rng, n, n, 7);
    EXPECT_EQ(Determinant(m), testing::LaplaceDeterminant(m));
  }
}

TEST(HermiteNormalForm, EchelonWithReducedColumns) {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = RandomLowRank(&rng, 1 + rng() % 4, 1 + rng() % 5);
    IntMatrix h = HermiteNormalForm(m);
    EXPECT_EQ(Rank(h), Rank(m));
    size_t last_pivot = 0;
    bool first = true;
    for (size_t i = 0; i < h.rows(); ++i) {
      size_t p = 0;
      while (p < h.cols() && h(i, p) == 0) ++p;
      if (p == h.cols()) continue;
      EXPECT_GT(h(i, p), 0);
      if (!first) {
        EXPECT_GT(p, last_pivot);
      }
      for (size_t k = 0; k < i; ++k) {
        EXPECT_GE(h(k, p), 0);
        EXPECT_LT(h(k, p), h(i, p));
      }
      last_pivot = p;
      first = false;
    }
  }
}

TEST(KernelBasis, IdentityHasEmptyKernel) {
  EXPECT_EQ(KernelBasis(IntMatrix::Identity(3)).cols(), 0u);
}

TEST(KernelBasis, SumRowIsSaturated) {
  IntMatrix m{{1, 1, 1}};
  IntMatrix k = KernelBasis(m);
  ASSERT_EQ(k.cols(), 2u);
  EXPECT_TRUE((m * k).IsZero());
  for (const Integer& s : SmithNormalForm(k).diagonal) EXPECT_EQ(s, 1);
}

TEST(KernelBasis, GaleExampleHasRankTwoKernel) {
  IntMatrix a = VectorConfig(4, testing::GaleExampleVectors()).matrix();
  EXPECT_EQ(KernelBasis(a).cols(), 2u);
}

TEST(KernelBasis, SaturationProperty) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = RandomLowRank(&rng, 1 + rng() % 4, 1 + rng() % 6);
    IntMatrix k = KernelBasis(m);
    EXPECT_EQ(k.cols(), m.cols() - Rank(m));
    EXPECT_TRUE((m * k).IsZero());
    EXPECT_TRUE(IsKernelBasis(m, k));
    // Saturated: all invariant factors of the basis are 1.
    for (const Integer& s : SmithNormalForm(k).diagonal) EXPECT_EQ(s, 1);
    // Stacking M over K^T has full column rank.
    std::vector<IntVector> rows;
    for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.Row(i));
    for (size_t j = 0; j < k.cols(); ++j) rows.push_back(k.Column(j));
    EXPECT_EQ(testing::RationalRank(IntMatrix::FromRows(rows, m.cols())), m.cols());
  }
}

TEST(KernelBasis, RejectsNonSaturatedBasis) {
  IntMatrix m{{1, 1, 1}};
  IntMatrix doubled = IntMatrix::FromColumns({ToIntVector({2, -2, 0}), ToIntVector({0, 1, -1})}, 3);
  EXPECT_FALSE(IsKernelBasis(m, doubled));
}

LinearConstraint C(std::initializer_list<long> a, Relation r, long b) {
  return {ToIntVector(a), r, b};
}

TEST(RationalFeasible, ClosedPointSystem) {
  std::vector<LinearConstraint> sys = {C({1}, Relation::kGe, 0), C({1}, Relation::kLe, 0)};
  auto x = RationalFeasible(sys, 1);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 0);
}

TEST(RationalFeasible, StrictContradiction) {
  std::vector<LinearConstraint> sys = {C({1}, Relation::kGt, 0), C({1}, Relation::kLt, 0)};
  EXPECT_FALSE(RationalFeasible(sys, 1).has_value());
}

TEST(RationalFeasible, OpenIntervalNeedsFraction) {
  std::vector<LinearConstraint> sys = {C({2}, Relation::kGt, 0), C({2}, Relation::kLt, 1)};
  auto x = RationalFeasible(sys, 1);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(Satisfies(sys, *x));
}

TEST(ConeCoefficients, ForcedSum) {
  auto c = ConeCoefficients({ToIntVector({1, -1, 0}), ToIntVector({0, 1, -1})},
                            ToIntVector({1, 0, -1}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], 1);
  EXPECT_EQ((*c)[1], 1);
  EXPECT_FALSE(ConeCoefficients({ToIntVector({1, -1, 0}), ToIntVector({0, 1, -1})},
                                ToIntVector({-1, 0, 1}))
                   .has_value());
}

TEST(RationalFeasible, AgreesWithGridSearch) {
  Rng rng(19);
  std::uniform_int_distribution<long> coeff(-3, 3), bound(-4, 4);
  const Relation relations[] = {Relation::kGe, Relation::kGt, Relation::kLe,
                                Relation::kLt, Relation::kEq};
  for (int trial = 0; trial < 150; ++trial) {
    size_t vars = 2 + rng() % 2;
    size_t count = 1 + rng() % 4;
    std::vector<LinearConstraint> sys;
    for (size_t k = 0; k < count; ++k) {
      IntVector a(vars);
      for (Integer& x : a) x = coeff(rng);
      Relation r = relations[rng() % (trial % 3 == 0 ? 5 : 4)];
      sys.push_back({a, r, bound(rng)});
    }
    // Keep the search space bounded so the grid oracle is complete enough.
    for (size_t i = 0; i < vars; ++i) {
      IntVector e(vars);
      e[i] = 1;
      sys.push_back({e, Relation::kGe, -3});
      sys.push_back({e, Relation::kLe, 3});
    }
    auto x = RationalFeasible(sys, vars);
    if (x) {
      EXPECT_TRUE(Satisfies(sys, *x));
    }
    // A grid point is a certificate of feasibility.
    if (testing::GridFeasible(sys, vars, 3, vars == 2 ? 12 : 6)) {
      EXPECT_TRUE(x.has_value());
    }
  }
}

}  // namespace
}  // namespace signed_toric
