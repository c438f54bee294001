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

// Pseudo-forests and circuits of a bidirected graph, described structurally.
//
// A pseudo-forest is an edge set whose components are trees, trees with one
// halfedge, or trees plus one edge closing a negative circle. Circuits are
// the minimal non-pseudo-forests:
//   T1  a positive circle
//   T2  two negative circles joined by a (possibly empty) path
//   T3  a negative circle joined to a halfedge by a (possibly empty) path
//   T4  two halfedges joined by a (possibly empty) path

#ifndef SIGNED_TORIC_SIGNED_CIRCUITS_H_
#define SIGNED_TORIC_SIGNED_CIRCUITS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "signed_toric/bidirected_graph.h"
#include "signed_toric/int_matrix.h"
#include "signed_toric/vector_config.h"
#include "signed_toric/walk.h"

namespace signed_toric {

enum class CircuitKind { kT1, kT2, kT3, kT4 };

std::string CircuitKindName(CircuitKind kind);

struct SignedCircuit {
  CircuitKind kind;
  std::vector<size_t> edges;  // sorted support
  Walk walk;
  std::vector<int> rho;  // per walk occurrence
  IntVector vector;      // sum of rho * chi_e; lies in ker(A)
};

// Case 1: no halfedge and no negative circle. Case 2: some halfedge.
// Case 3: a negative circle but no halfedge.
enum class CaseType { kCase1 = 1, kCase2 = 2, kCase3 = 3 };

bool IsPseudoForest(const BidirectedGraph& g, const std::vector<size_t>& edges);

// Requires a connected graph.
CaseType ClassifyCase(const BidirectedGraph& g);

// A spanning tree chosen greedily in edge order, plus the lowest-indexed
// halfedge (Case 2) or the lowest-indexed edge closing a negative circle
// (Case 3). Requires a connected graph. Sorted.
std::vector<size_t> MaximalPseudoForest(const BidirectedGraph& g);

// Throws ValidationError unless `forest` is a connected spanning tree (Case
// 1), halfedge-tree (Case 2) or pseudo-tree (Case 3) of the connected graph g.
void ValidatePseudoForest(const BidirectedGraph& g,
                          const std::vector<size_t>& forest);

// Edges of the negative circle of a pseudo-tree; empty if there is none.
std::vector<size_t> NegativeCircleOf(const BidirectedGraph& g,
                                     const std::vector<size_t>& forest);

// The kind of the edge set if it is a circuit.
std::optional<CircuitKind> ClassifyCircuit(const BidirectedGraph& g,
                                           const std::vector<size_t>& edges);

// Canonical traversal of a circuit. Without `start`:
//   T1  from the lowest edge, towards its lower-indexed neighbouring edge;
//   T2  around the circle holding the lowest edge from its attachment vertex,
//       along the path, around the other circle, and back;
//   T3  from the halfedge along the path, once around the circle, and back;
//   T4  from the lower-indexed halfedge to the other.
// A start edge rotates a T1/T2 walk to begin there and picks the starting
// halfedge of a T4 walk; for T3 only the halfedge is accepted.
Walk CanonicalWalk(const BidirectedGraph& g, const std::vector<size_t>& edges,
                   std::optional<size_t> start = std::nullopt);

// Fills rho and vector from a walk on the circuit `edges`.
SignedCircuit MakeCircuit(const BidirectedGraph& g, std::vector<size_t> edges,
                          Walk walk);

// All circuits with canonical walks, sorted by support. Throws LimitExceeded
// if the graph has more than `limit` edges.
std::vector<SignedCircuit> CircuitsStructural(
    const BidirectedGraph& g, size_t limit = kDefaultEnumerationLimit);

// The unique circuit in forest + {epsilon}, as a sorted edge set.
std::vector<size_t> FundamentalCircuitSupport(
    const BidirectedGraph& g, const std::vector<size_t>& forest, size_t epsilon);

// The fundamental circuit of epsilon with a canonical walk in which epsilon
// occurs once, started at epsilon when the kind allows it.
SignedCircuit FundamentalCircuit(const BidirectedGraph& g,
                                 const std::vector<size_t>& forest,
                                 size_t epsilon);

// Edge sets of all circles (simple cycles of ordinary edges), each sorted.
std::vector<std::vector<size_t>> AllCircles(
    const BidirectedGraph& g, size_t limit = kDefaultEnumerationLimit);

// Product of the edge signs of a set of ordinary edges.
int CircleSign(const BidirectedGraph& g, const std::vector<size_t>& edges);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_SIGNED_CIRCUITS_H_
