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

#include "signed_toric/walk.h"

#include <algorithm>

#include "signed_toric/errors.h"

namespace signed_toric {

std::string Walk::ToString() const {
  std::string s = "(";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) s += ",v" + std::to_string(vertices[i - 1] + 1) + ",";
    s += "e" + std::to_string(edges[i] + 1);
  }
  return s + ")";
}

void ValidateWalk(const BidirectedGraph& g, const Walk& w) {
  if (w.edges.empty()) throw ValidationError("empty walk");
  if (w.vertices.size() + 1 != w.edges.size()) {
    throw ValidationError("walk must alternate edges and vertices");
  }
  for (size_t e : w.edges) {
    if (e >= g.edge_count()) throw ValidationError("walk uses unknown edge");
  }
  for (size_t i = 0; i < w.vertices.size(); ++i) {
    int v = w.vertices[i];
    if (!g.edge(w.edges[i]).Touches(v) || !g.edge(w.edges[i + 1]).Touches(v)) {
      throw ValidationError("walk vertex v" + std::to_string(v + 1) +
                            " is not incident with its neighbouring edges");
    }
  }
  for (size_t i = 1; i + 1 < w.edges.size(); ++i) {
    const BiEdge& e = g.edge(w.edges[i]);
    if (e.is_halfedge()) {
      throw ValidationError("halfedge in the interior of a walk");
    }
    if (w.vertices[i - 1] == w.vertices[i]) {
      throw ValidationError("walk does not traverse edge e" +
                            std::to_string(w.edges[i] + 1));
    }
  }
}

int ClosingVertex(const BidirectedGraph& g, const Walk& w) {
  if (w.edges.size() < 2) return -1;
  const BiEdge& first = g.edge(w.edges.front());
  const BiEdge& last = g.edge(w.edges.back());
  if (first.is_halfedge() || last.is_halfedge()) return -1;
  int a = first.Other(w.vertices.front());
  int b = last.Other(w.vertices.back());
  return a == b ? a : -1;
}

std::vector<int> RhoSigns(const BidirectedGraph& g, const Walk& w) {
  ValidateWalk(g, w);
  std::vector<int> rho(w.edges.size());
  rho[0] = 1;
  for (size_t i = 1; i < w.edges.size(); ++i) {
    int v = w.vertices[i - 1];
    rho[i] = -g.edge(w.edges[i - 1]).Tau(v) * g.edge(w.edges[i]).Tau(v) *
             rho[i - 1];
  }
  return rho;
}

IntVector WalkVector(const BidirectedGraph& g, const Walk& w) {
  std::vector<int> rho = RhoSigns(g, w);
  IntVector x(g.edge_count());
  for (size_t i = 0; i < w.edges.size(); ++i) x[w.edges[i]] += rho[i];
  return x;
}

Walk Reverse(const Walk& w) {
  Walk r = w;
  std::reverse(r.edges.begin(), r.edges.end());
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

}  // namespace signed_toric
