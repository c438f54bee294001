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

#include "signed_toric/bidirected_graph.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "signed_toric/errors.h"

namespace signed_toric {

int BiEdge::Tau(int w) const {
  if (w == u) return tau_u;
  if (w == v) return tau_v;
  return 0;
}

BidirectedGraph::BidirectedGraph(int vertex_count, std::vector<BiEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw ValidationError("negative vertex count");
  auto valid_vertex = [&](int w) { return w >= 0 && w < vertex_count; };
  auto valid_sign = [](int s) { return s == 1 || s == -1; };
  for (size_t i = 0; i < edges_.size(); ++i) {
    const BiEdge& e = edges_[i];
    const std::string name = "edge e" + std::to_string(i + 1);
    if (!valid_vertex(e.u) || !valid_sign(e.tau_u)) {
      throw ValidationError(name + " has an invalid endpoint");
    }
    if (e.is_halfedge()) continue;
    if (!valid_vertex(e.v) || !valid_sign(e.tau_v)) {
      throw ValidationError(name + " has an invalid endpoint");
    }
    if (e.u == e.v) {
      throw ValidationError("loop at vertex " + std::to_string(e.u + 1));
    }
  }
}

IntMatrix BidirectedGraph::IncidenceMatrix() const {
  IntMatrix a(vertex_count_, edges_.size());
  for (size_t j = 0; j < edges_.size(); ++j) {
    const BiEdge& e = edges_[j];
    a(e.u, j) = e.tau_u;
    if (!e.is_halfedge()) a(e.v, j) = e.tau_v;
  }
  return a;
}

BidirectedGraph BidirectedGraph::Switch(const std::vector<int>& vertices) const {
  std::vector<bool> flip(vertex_count_, false);
  for (int w : vertices) {
    if (w < 0 || w >= vertex_count_) throw ValidationError("bad switch vertex");
    flip[w] = !flip[w];
  }
  std::vector<BiEdge> edges = edges_;
  for (BiEdge& e : edges) {
    if (flip[e.u]) e.tau_u = -e.tau_u;
    if (!e.is_halfedge() && flip[e.v]) e.tau_v = -e.tau_v;
  }
  return BidirectedGraph(vertex_count_, std::move(edges));
}

int BidirectedGraph::Components(std::vector<int>* component) const {
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const BiEdge& e : edges_) {
    if (e.is_halfedge()) continue;
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  component->assign(vertex_count_, -1);
  std::vector<int> id_of_root(vertex_count_, -1);
  int count = 0;
  for (int w = 0; w < vertex_count_; ++w) {
    int r = find(w);
    if (id_of_root[r] < 0) id_of_root[r] = count++;
    (*component)[w] = id_of_root[r];
  }
  return count;
}

bool BidirectedGraph::IsConnected() const {
  std::vector<int> component;
  return Components(&component) <= 1;
}

std::vector<std::vector<size_t>> BidirectedGraph::IncidenceLists() const {
  std::vector<std::vector<size_t>> lists(vertex_count_);
  for (size_t j = 0; j < edges_.size(); ++j) {
    lists[edges_[j].u].push_back(j);
    if (!edges_[j].is_halfedge()) lists[edges_[j].v].push_back(j);
  }
  return lists;
}

std::string EdgeSetToString(const std::vector<size_t>& edges) {
  std::string s;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) s += ",";
    s += "e" + std::to_string(edges[i] + 1);
  }
  return s;
}

}  // namespace signed_toric
