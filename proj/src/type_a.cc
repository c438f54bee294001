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

#include "signed_toric/type_a.h"

#include <algorithm>
#include <string>

#include "signed_toric/balance.h"
#include "signed_toric/errors.h"
#include "signed_toric/signed_circuits.h"
#include "signed_toric/signed_weights.h"
#include "signed_toric/walk.h"

namespace signed_toric {

bool IsTypeA(const BidirectedGraph& g) {
  for (const BiEdge& e : g.edges()) {
    if (e.is_halfedge() || e.Sign() < 0) return false;
  }
  return true;
}

Orientation ReferenceOrientation(const BidirectedGraph& g) {
  Orientation o;
  for (size_t k = 0; k < g.edge_count(); ++k) {
    const BiEdge& e = g.edge(k);
    if (e.is_halfedge() || e.Sign() < 0) {
      throw ValidationError("e" + std::to_string(k + 1) +
                            " is not a type-A root");
    }
    o.push_back(e.tau_u < 0 ? Arc{e.u, e.v} : Arc{e.v, e.u});
  }
  return o;
}

TypeAReduction ToTypeA(const BidirectedGraph& g) {
  BalanceResult balance = CheckBalance(g);
  if (!balance.balanced) {
    throw ValidationError("not balanced: negative circle {" +
                          EdgeSetToString(balance.negative_circle) + "}");
  }
  TypeAReduction out;
  out.original = g;
  out.switched_vertices = balance.switching;
  BidirectedGraph switched = g.Switch(balance.switching);
  const int d = g.vertex_count();
  bool has_half = false;
  std::vector<BiEdge> edges;
  for (const BiEdge& e : switched.edges()) {
    if (e.is_halfedge()) {
      has_half = true;
      edges.push_back(BiEdge::Ordinary(e.u, e.tau_u, d, -e.tau_u));
    } else {
      edges.push_back(e);
    }
  }
  if (has_half) out.added_vertex = d;
  out.reduced = BidirectedGraph(has_half ? d + 1 : d, std::move(edges));
  out.reduced_roots = RootsOfGraph(out.reduced);
  out.orientation = ReferenceOrientation(out.reduced);
  return out;
}

SignedPoset Hibi(int element_count, const std::vector<std::pair<int, int>>& covers) {
  const int n = element_count;
  if (n < 0) throw ValidationError("negative element count");
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (auto [i, j] : covers) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw ValidationError("cover " + std::to_string(i + 1) + " " +
                            std::to_string(j + 1) + " names an unknown element");
    }
    if (i == j) throw ValidationError("cover of p" + std::to_string(i + 1) + " by itself");
    reach[i][j] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (reach[i][i]) {
      throw ValidationError("relations are not a poset: cycle through p" +
                            std::to_string(i + 1));
    }
  }
  // Covers of the bounded poset, with p_0 = 0 and p_{n+1} = n + 1.
  std::vector<std::pair<int, int>> hasse;
  for (int j = 0; j < n; ++j) {
    bool minimal = true;
    for (int i = 0; i < n; ++i) minimal = minimal && !reach[i][j];
    if (minimal) hasse.push_back({0, j + 1});
  }
  for (int i = 0; i < n; ++i) {
    bool maximal = true;
    for (int j = 0; j < n; ++j) {
      maximal = maximal && !reach[i][j];
      if (!reach[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) cover = !(reach[i][k] && reach[k][j]);
      if (cover) hasse.push_back({i + 1, j + 1});
    }
    if (maximal) hasse.push_back({i + 1, n + 1});
  }
  if (n == 0) hasse.push_back({0, 1});
  std::sort(hasse.begin(), hasse.end());
  const size_t d = n + 1;
  std::vector<IntVector> roots;
  for (auto [i, j] : hasse) {
    IntVector v(d);
    v[j - 1] = 1;
    if (i != 0) v[i - 1] = -1;
    roots.push_back(v);
  }
  return SignedPoset(d, roots);
}

ConicPolytope CyclePolytope(const BidirectedGraph& g,
                            const std::vector<size_t>& tree, size_t limit) {
  Orientation reference = ReferenceOrientation(g);
  if (!g.IsConnected()) throw ValidationError("graph is not connected");
  SignedWeights w = ComputeSignedWeights(g, tree);
  const size_t t = w.epsilons.size();
  std::vector<int> coordinate(g.edge_count(), -1);
  for (size_t i = 0; i < t; ++i) {
    if (w.weights.free_part(i, w.epsilons[i]) != 1) {
      throw InvariantFailure("fundamental walk does not run along e" +
                             std::to_string(w.epsilons[i] + 1));
    }
    coordinate[w.epsilons[i]] = static_cast<int>(i);
  }
  ConicPolytope p;
  p.ambient_dim = t;
  std::vector<std::vector<size_t>> circles = AllCircles(g, limit);
  for (size_t k = 0; k < circles.size(); ++k) {
    Walk walk = CanonicalWalk(g, circles[k]);
    const int closing = ClosingVertex(g, walk);
    Facet f;
    f.circuit_index = k;
    f.functional.assign(t, 0);
    f.lower = 0;
    f.upper = 0;
    for (size_t occ = 0; occ < walk.edges.size(); ++occ) {
      const size_t e = walk.edges[occ];
      const int from = occ == 0 ? closing : walk.vertices[occ - 1];
      const int sign = reference[e].first == from ? 1 : -1;
      (sign > 0 ? f.upper : f.lower) += sign;
      if (coordinate[e] >= 0) f.functional[coordinate[e]] += sign;
    }
    p.facets.push_back(std::move(f));
  }
  return p;
}

}  // namespace signed_toric
