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

// Signed posets: subsets of the type-B root system {+-x_i +- x_j} u {+-x_i}
// that are antisymmetric and closed under nonnegative combinations.

#ifndef SIGNED_TORIC_SIGNED_POSET_H_
#define SIGNED_TORIC_SIGNED_POSET_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "signed_toric/bidirected_graph.h"
#include "signed_toric/int_matrix.h"
#include "signed_toric/vector_config.h"

namespace signed_toric {

bool IsBRoot(const IntVector& v);

// All 2d^2 roots of the type-B root system in Z^d.
std::vector<IntVector> AllBRoots(size_t d);

// "+x1-x2", "-x3".
std::string RootToString(const IntVector& v);

// An ordered set of B-type roots. Construction checks only that every vector
// is a root and that none repeats; see ValidatePoset for the poset axioms.
class SignedPoset {
 public:
  SignedPoset(size_t dim, std::vector<IntVector> roots);

  size_t dim() const { return dim_; }
  const std::vector<IntVector>& roots() const { return roots_; }

 private:
  size_t dim_;
  std::vector<IntVector> roots_;
};

// C(roots) intersected with the root system: the input roots in order
// followed by the roots they generate, in AllBRoots order.
std::vector<IntVector> PositiveLinearClosure(const std::vector<IntVector>& roots,
                                             size_t d);

SignedPoset CloseUp(const SignedPoset& p);

struct PosetDiagnostics {
  bool valid = true;
  std::vector<std::string> problems;
};

// Antisymmetry and closure.
PosetDiagnostics ValidatePoset(const SignedPoset& p);

// Roots that are not nonnegative combinations of the others, in input order.
VectorConfig ExtremalGenerators(const SignedPoset& p);

// Halfedge for +-x_i, ordinary edge for +-x_i +- x_j, with incidence signs
// equal to the coordinates. Throws ValidationError on non-roots.
BidirectedGraph HasseDiagram(size_t d, const std::vector<IntVector>& roots);
BidirectedGraph HasseDiagram(const VectorConfig& v);

// The columns of an incidence matrix as root vectors.
std::vector<IntVector> RootsOfGraph(const BidirectedGraph& g);

// A simple graph on vertices 0..n-1.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// {x_v + x_w : vw an edge}. Throws ValidationError on loops or repeated edges.
SignedPoset GraphPoset(const SimpleGraph& g);

// A connected piece of a poset's Hasse diagram. `vertices` and `edges` map
// local indices to indices of the whole.
struct PosetComponent {
  std::vector<int> vertices;
  std::vector<size_t> edges;
  BidirectedGraph graph;
};

// Connected components in order of smallest vertex; isolated vertices form
// components without edges.
std::vector<PosetComponent> DecomposeGraph(const BidirectedGraph& g);

// Components of P~ as posets on relabelled coordinates.
std::vector<SignedPoset> Decompose(const SignedPoset& p);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_SIGNED_POSET_H_
