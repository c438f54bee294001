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

#ifndef SIGNED_TORIC_WALK_H_
#define SIGNED_TORIC_WALK_H_

#include <cstddef>
#include <string>
#include <vector>

#include "signed_toric/bidirected_graph.h"
#include "signed_toric/int_matrix.h"

namespace signed_toric {

// (e_1, v_1, e_2, ..., v_{l-1}, e_l): vertices[i] joins edges[i] and
// edges[i + 1]. A closed walk returns through the endpoint of e_l that is
// also the far endpoint of e_1.
struct Walk {
  std::vector<size_t> edges;
  std::vector<int> vertices;

  size_t length() const { return edges.size(); }
  // "(e6,v1,e4,v4,e3,v3,e7)", 1-based.
  std::string ToString() const;

  friend bool operator==(const Walk& a, const Walk& b) {
    return a.edges == b.edges && a.vertices == b.vertices;
  }
};

// Throws ValidationError unless every v_i is incident with e_i and e_{i+1},
// interior edges are ordinary and traversed between distinct vertices.
void ValidateWalk(const BidirectedGraph& g, const Walk& w);

// The base vertex of a closed walk, or -1 if the walk is not closed.
int ClosingVertex(const BidirectedGraph& g, const Walk& w);

// rho per occurrence: rho_1 = 1,
// rho_i = -tau(e_{i-1}, v_{i-1}) tau(e_i, v_{i-1}) rho_{i-1}.
std::vector<int> RhoSigns(const BidirectedGraph& g, const Walk& w);

// sum over occurrences of rho * chi_e.
IntVector WalkVector(const BidirectedGraph& g, const Walk& w);

// The walk traversed backwards.
Walk Reverse(const Walk& w);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_WALK_H_
