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

// Balanced signed posets: reduction to type A, Hibi posets and the cycle
// description of the conic region.

#ifndef SIGNED_TORIC_TYPE_A_H_
#define SIGNED_TORIC_TYPE_A_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "signed_toric/bidirected_graph.h"
#include "signed_toric/conic.h"
#include "signed_toric/signed_poset.h"

namespace signed_toric {

// An edge directed tail -> head.
using Arc = std::pair<int, int>;
// One arc per edge, in edge order.
using Orientation = std::vector<Arc>;

struct TypeAReduction {
  BidirectedGraph original;
  std::vector<int> switched_vertices;  // sorted, 0-based
  std::optional<int> added_vertex;     // 0-based; present iff halfedges exist
  BidirectedGraph reduced;
  std::vector<IntVector> reduced_roots;  // columns of the reduced incidence
  Orientation orientation;               // of the reduced graph
};

// Switches by CheckBalance's vertex set and turns each halfedge at v into an
// edge {v, d+1} keeping the sign at v. Throws ValidationError naming a
// negative circle if g is not balanced.
TypeAReduction ToTypeA(const BidirectedGraph& g);

// True iff g has no halfedges and every edge is positive.
bool IsTypeA(const BidirectedGraph& g);

// For a type-A graph, the root x_j - x_i orients its edge i -> j. Throws
// ValidationError otherwise.
Orientation ReferenceOrientation(const BidirectedGraph& g);

// The signed poset of a finite poset on p_1..p_n given by covers (0-based
// pairs i < j meaning p_{i+1} < p_{j+1}, transitive closure implied). Adds a
// bottom p_0 and a top p_{n+1}; a cover p_0 < p_j gives x_j, any other cover
// p_i < p_j gives x_j - x_i. Roots are ordered by (i, j); d = n + 1. Throws
// ValidationError if the relations contain a cycle or a loop.
SignedPoset Hibi(int element_count, const std::vector<std::pair<int, int>>& covers);

// For a connected type-A graph and a spanning tree: one facet pair per cycle
// C, -#C_down < sum_{eps_i in C_up} z_i - sum_{eps_j in C_down} z_j < #C_up,
// with up/down relative to the reference orientation. The coordinates follow
// ComputeSignedWeights(g, tree).
ConicPolytope CyclePolytope(const BidirectedGraph& g,
                            const std::vector<size_t>& tree,
                            size_t limit = kDefaultEnumerationLimit);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_TYPE_A_H_
