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

// Acyclic orientations with a unique source, the Tutte polynomial of a graph,
// and the bijection between such orientations and conic classes of a
// type-A signed poset.

#ifndef SIGNED_TORIC_ORIENTATIONS_H_
#define SIGNED_TORIC_ORIENTATIONS_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "signed_toric/bidirected_graph.h"
#include "signed_toric/class_group.h"
#include "signed_toric/conic.h"
#include "signed_toric/type_a.h"

namespace signed_toric {

// All acyclic orientations of the graph underlying `reference` whose only
// source is `source`. Backtracking over edges in order, trying the reference
// direction first. Throws ValidationError if the graph is disconnected.
std::vector<Orientation> AcyclicOrientationsUniqueSource(
    int vertex_count, const Orientation& reference, int source);

bool IsAcyclic(int vertex_count, const Orientation& o);

// Edges oriented the same way in `o` and `reference`, sorted.
std::vector<size_t> AgreementSet(const Orientation& reference,
                                 const Orientation& o);

// Out-degree of each vertex.
IntVector OutDegrees(int vertex_count, const Orientation& o);

// The sum of the weights over the agreement set. Throws ValidationError if
// `o` has a directed cycle.
ClassElement OrientationToClass(int vertex_count, const Orientation& reference,
                                const Orientation& o, const WeightSystem& w);

// A (chi_{E(o1)} - chi_{E(o2)}) = outdeg(o2) - outdeg(o1), with E(.) the
// agreement set with the reference orientation of the type-A graph g.
bool ChipFiringIdentityHolds(const BidirectedGraph& g, const Orientation& o1,
                             const Orientation& o2);

// T(x, y) = sum over edge subsets S of
// (x-1)^{c(S)-c(E)} (y-1)^{c(S)+#S-#V}, by subset expansion. Throws
// LimitExceeded above `limit` edges.
Rational TutteGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                    const Rational& x, const Rational& y,
                    size_t limit = kDefaultEnumerationLimit);

struct BijectionReport {
  std::vector<Orientation> orientations;
  std::vector<IntVector> classes;  // free part, per orientation
  std::vector<IntVector> points;   // open lattice points of the region
  Integer tutte;                   // T(1, 0)
  bool injective = false;
  bool onto_points = false;
  bool counts_agree = false;
  std::vector<std::string> problems;

  bool ok() const { return injective && onto_points && counts_agree; }
};

// Checks that orientations with unique source `source` map injectively onto
// the open lattice points of `region` and that both sides have T(1, 0)
// elements. Failures are recorded in the report, not thrown.
BijectionReport VerifyBijection(const BidirectedGraph& g, int source,
                                const WeightSystem& w,
                                const ConicPolytope& region,
                                size_t limit = kDefaultEnumerationLimit);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_ORIENTATIONS_H_
