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

// Worked examples shared by the unit tests and the acceptance binary. Roots
// are written with signed 1-based coordinates: {+1, -2} is x1 - x2.

#ifndef SIGNED_TORIC_TESTS_SUPPORT_EXAMPLES_H_
#define SIGNED_TORIC_TESTS_SUPPORT_EXAMPLES_H_

#include <cstdlib>
#include <initializer_list>
#include <vector>

#include "signed_toric/bidirected_graph.h"
#include "signed_toric/int_matrix.h"
#include "signed_toric/signed_poset.h"
#include "signed_toric/walk.h"

namespace signed_toric::testing {

inline IntVector Root(size_t d, std::initializer_list<int> coords) {
  IntVector v(d);
  for (int c : coords) v[std::abs(c) - 1] = c > 0 ? 1 : -1;
  return v;
}

inline std::vector<IntVector> Roots(
    size_t d, std::initializer_list<std::initializer_list<int>> roots) {
  std::vector<IntVector> out;
  for (auto r : roots) out.push_back(Root(d, r));
  return out;
}

// Alternating 1-based edges and vertices: {6, 1, 4, 4, 3, 3, 7} is
// (e6, v1, e4, v4, e3, v3, e7).
inline Walk MakeWalk(std::initializer_list<int> items) {
  Walk w;
  bool edge = true;
  for (int x : items) {
    if (edge) {
      w.edges.push_back(x - 1);
    } else {
      w.vertices.push_back(x - 1);
    }
    edge = !edge;
  }
  return w;
}

inline std::vector<size_t> Edges(std::initializer_list<int> one_based) {
  std::vector<size_t> out;
  for (int e : one_based) out.push_back(e - 1);
  return out;
}

// Six vectors in Z^4: x1, x2, x3, x4 - x1, x4 - x2, x4 - x3.
inline std::vector<IntVector> GaleExampleVectors() {
  return Roots(4, {{1}, {2}, {3}, {4, -1}, {4, -2}, {4, -3}});
}

// The kernel basis whose Gale vectors are (1,0), (0,1), (-1,-1) twice.
inline IntMatrix GaleExampleKernel() {
  return IntMatrix::FromColumns(
      {{1, 0, -1, 1, 0, -1}, {0, 1, -1, 0, 1, -1}}, 6);
}

inline std::vector<IntVector> Figure1Roots() {
  return Roots(4, {{1}, {2, -1}, {2, 3}, {2, -3}, {-3, -4}, {1, -4}});
}

inline BidirectedGraph P1Graph() {
  return HasseDiagram(4, Roots(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4},
                                   {1}, {3}}));
}
inline std::vector<size_t> P1Forest() { return Edges({1, 3, 4, 7}); }
inline std::vector<Walk> P1Walks() {
  return {MakeWalk({6, 1, 4, 4, 3, 3, 7}), MakeWalk({2, 2, 1, 1, 4, 4, 3}),
          MakeWalk({7, 3, 3, 4, 5, 2, 1, 1, 4, 4, 3, 3, 7})};
}

inline BidirectedGraph P2Graph() {
  return HasseDiagram(4, Roots(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, -4},
                                   {3, -2}}));
}
inline std::vector<size_t> P2Forest() { return Edges({1, 2, 3, 5}); }
inline std::vector<Walk> P2Walks() {
  return {MakeWalk({4, 1, 1, 2, 2, 3, 3}), MakeWalk({6, 3, 3, 4, 5, 1, 1})};
}

inline std::vector<IntVector> ReductionExampleRoots() {
  return Roots(4, {{3, 1}, {4, 1}, {3, 2}, {4, 2}, {1}, {2}});
}
inline std::vector<IntVector> ReductionExampleReduced() {
  return Roots(5, {{3, -1}, {4, -1}, {3, -2}, {4, -2}, {5, -1}, {5, -2}});
}

// K_{2,3} as a type-A poset; it is the reduction of the roots above.
inline BidirectedGraph K23Graph() {
  return HasseDiagram(5, Roots(5, {{3, -1}, {4, -1}, {3, -2}, {4, -2},
                                   {5, -1}, {5, -2}}));
}

inline std::vector<size_t> K23Tree() { return Edges({2, 3, 4, 6}); }

}  // namespace signed_toric::testing

#endif  // SIGNED_TORIC_TESTS_SUPPORT_EXAMPLES_H_
