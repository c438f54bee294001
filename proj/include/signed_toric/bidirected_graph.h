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

#ifndef SIGNED_TORIC_BIDIRECTED_GRAPH_H_
#define SIGNED_TORIC_BIDIRECTED_GRAPH_H_

#include <cstddef>
#include <string>
#include <vector>

#include "signed_toric/int_matrix.h"

namespace signed_toric {

// An ordinary edge {u, v} with incidence signs tau_u, tau_v, or a halfedge at
// u (v == kNoVertex). tau = +1 means the edge enters the vertex. Vertices are
// 0-based.
struct BiEdge {
  static constexpr int kNoVertex = -1;

  int u = 0;
  int tau_u = 1;
  int v = kNoVertex;
  int tau_v = 0;

  static BiEdge Ordinary(int u, int tau_u, int v, int tau_v) {
    return {u, tau_u, v, tau_v};
  }
  static BiEdge Half(int u, int tau_u) { return {u, tau_u, kNoVertex, 0}; }

  bool is_halfedge() const { return v == kNoVertex; }
  bool Touches(int w) const { return u == w || v == w; }
  // tau(e, w), or 0 if w is not an endpoint.
  int Tau(int w) const;
  // The other endpoint of an ordinary edge.
  int Other(int w) const { return w == u ? v : u; }
  // sigma(e) = -tau_u tau_v for ordinary edges.
  int Sign() const { return -tau_u * tau_v; }

  friend bool operator==(const BiEdge& a, const BiEdge& b) {
    return a.u == b.u && a.tau_u == b.tau_u && a.v == b.v && a.tau_v == b.tau_v;
  }
};

class BidirectedGraph {
 public:
  BidirectedGraph() = default;
  // Throws ValidationError on loops, bad vertices or bad signs.
  BidirectedGraph(int vertex_count, std::vector<BiEdge> edges);

  int vertex_count() const { return vertex_count_; }
  size_t edge_count() const { return edges_.size(); }
  const BiEdge& edge(size_t i) const { return edges_[i]; }
  const std::vector<BiEdge>& edges() const { return edges_; }

  // vertex_count x edge_count matrix with entry tau(e, v).
  IntMatrix IncidenceMatrix() const;

  // Negates every incidence sign at the given vertices.
  BidirectedGraph Switch(const std::vector<int>& vertices) const;

  // Component id per vertex using all edges; ids are numbered by smallest
  // vertex. Returns the number of components.
  int Components(std::vector<int>* component) const;
  bool IsConnected() const;

  // Edge indices incident with each vertex.
  std::vector<std::vector<size_t>> IncidenceLists() const;

 private:
  int vertex_count_ = 0;
  std::vector<BiEdge> edges_;
};

// "e1,e2,e3" for 0-based edge indices.
std::string EdgeSetToString(const std::vector<size_t>& edges);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_BIDIRECTED_GRAPH_H_
