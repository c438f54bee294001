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

#include "signed_toric/signed_circuits.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "signed_toric/errors.h"

namespace signed_toric {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Greedy spanning forest of the ordinary edges among `edges`, in the given
// order. Remaining ordinary edges go to *rest.
void SpanningForest(const BidirectedGraph& g, const std::vector<size_t>& edges,
                    std::vector<size_t>* tree, std::vector<size_t>* rest) {
  UnionFind uf(g.vertex_count());
  for (size_t e : edges) {
    const BiEdge& edge = g.edge(e);
    if (edge.is_halfedge()) continue;
    if (uf.Union(edge.u, edge.v)) {
      tree->push_back(e);
    } else {
      rest->push_back(e);
    }
  }
}

// Vertex potentials psi with psi(u) psi(v) = sigma(e) on every tree edge.
std::vector<int> Potentials(const BidirectedGraph& g,
                            const std::vector<size_t>& tree) {
  std::vector<std::vector<size_t>> adj(g.vertex_count());
  for (size_t e : tree) {
    adj[g.edge(e).u].push_back(e);
    adj[g.edge(e).v].push_back(e);
  }
  std::vector<int> psi(g.vertex_count(), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (psi[root] != 0) continue;
    psi[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (size_t e : adj[x]) {
        int y = g.edge(e).Other(x);
        if (psi[y] != 0) continue;
        psi[y] = psi[x] * g.edge(e).Sign();
        queue.push(y);
      }
    }
  }
  return psi;
}

int FundamentalCircleSign(const BidirectedGraph& g, const std::vector<int>& psi,
                          size_t e) {
  const BiEdge& edge = g.edge(e);
  return edge.Sign() * psi[edge.u] * psi[edge.v];
}

// Shortest path from a to b using the allowed ordinary edges; ties broken by
// edge index. Vertex list includes both ends.
bool FindPath(const BidirectedGraph& g, const std::vector<size_t>& allowed,
              int a, int b, std::vector<size_t>* path_edges,
              std::vector<int>* path_vertices) {
  std::vector<size_t> sorted = allowed;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<size_t>> adj(g.vertex_count());
  for (size_t e : sorted) {
    if (g.edge(e).is_halfedge()) continue;
    adj[g.edge(e).u].push_back(e);
    adj[g.edge(e).v].push_back(e);
  }
  std::vector<long> via(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<int> queue;
  seen[a] = true;
  queue.push(a);
  while (!queue.empty() && !seen[b]) {
    int x = queue.front();
    queue.pop();
    for (size_t e : adj[x]) {
      int y = g.edge(e).Other(x);
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = static_cast<long>(e);
      queue.push(y);
    }
  }
  if (!seen[b]) return false;
  path_edges->clear();
  path_vertices->assign(1, b);
  for (int x = b; x != a;) {
    size_t e = static_cast<size_t>(via[x]);
    path_edges->push_back(e);
    x = g.edge(e).Other(x);
    path_vertices->push_back(x);
  }
  std::reverse(path_edges->begin(), path_edges->end());
  std::reverse(path_vertices->begin(), path_vertices->end());
  return true;
}

struct ComponentShape {
  int vertices = 0;
  int ordinary = 0;
  int halfedges = 0;
};

// Shapes of the components of the subgraph formed by `edges`, keyed by
// union-find root; *uf receives the union-find.
std::map<int, ComponentShape> Shapes(const BidirectedGraph& g,
                                     const std::vector<size_t>& edges,
                                     UnionFind* uf) {
  std::vector<bool> touched(g.vertex_count(), false);
  for (size_t e : edges) {
    const BiEdge& edge = g.edge(e);
    touched[edge.u] = true;
    if (!edge.is_halfedge()) {
      touched[edge.v] = true;
      uf->Union(edge.u, edge.v);
    }
  }
  std::map<int, ComponentShape> shapes;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (touched[v]) ++shapes[uf->Find(v)].vertices;
  }
  for (size_t e : edges) {
    const BiEdge& edge = g.edge(e);
    ComponentShape& s = shapes[uf->Find(edge.u)];
    if (edge.is_halfedge()) {
      ++s.halfedges;
    } else {
      ++s.ordinary;
    }
  }
  return shapes;
}

std::vector<size_t> Sorted(std::vector<size_t> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<size_t> Without(const std::vector<size_t>& edges, size_t drop) {
  std::vector<size_t> out;
  for (size_t e : edges) {
    if (e != drop) out.push_back(e);
  }
  return out;
}

bool IsBridge(const BidirectedGraph& g, const std::vector<size_t>& edges,
              size_t e) {
  std::vector<size_t> p;
  std::vector<int> pv;
  return !FindPath(g, Without(edges, e), g.edge(e).u, g.edge(e).v, &p, &pv);
}

// Builds a walk edge by edge, tracking the current vertex.
class WalkBuilder {
 public:
  WalkBuilder(const BidirectedGraph& g, size_t first, int from) : g_(g) {
    walk_.edges.push_back(first);
    current_ = g.edge(first).is_halfedge() ? from : g.edge(first).Other(from);
  }
  // Starts with a halfedge that arrives at its vertex.
  static WalkBuilder FromHalfedge(const BidirectedGraph& g, size_t h) {
    return WalkBuilder(g, h, g.edge(h).u);
  }
  void Step(size_t e) {
    walk_.vertices.push_back(current_);
    walk_.edges.push_back(e);
    if (!g_.edge(e).is_halfedge()) current_ = g_.edge(e).Other(current_);
  }
  int current() const { return current_; }
  Walk Finish() const { return walk_; }

 private:
  const BidirectedGraph& g_;
  Walk walk_;
  int current_;
};

// Edges of `circle` at vertex x, sorted.
std::vector<size_t> CircleEdgesAt(const BidirectedGraph& g,
                                  const std::vector<size_t>& circle, int x) {
  std::vector<size_t> out;
  for (size_t e : circle) {
    if (g.edge(e).Touches(x)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Traverses `circle` once starting from x along `first`.
void TraverseCircle(const BidirectedGraph& g, const std::vector<size_t>& circle,
                    int x, size_t first, WalkBuilder* builder,
                    bool first_is_start) {
  std::set<size_t> used;
  size_t e = first;
  int at = x;
  while (true) {
    if (!first_is_start || e != first) builder->Step(e);
    used.insert(e);
    at = g.edge(e).Other(at);
    if (at == x) break;
    size_t next = e;
    for (size_t f : CircleEdgesAt(g, circle, at)) {
      if (used.count(f) == 0) {
        next = f;
        break;
      }
    }
    if (next == e) throw InvariantFailure("circle traversal failed");
    e = next;
  }
}

// Splits the non-bridge edges of a T2/T3 circuit into circles. The first
// circle contains the lowest non-bridge edge.
std::vector<std::vector<size_t>> SplitCircles(const BidirectedGraph& g,
                                              const std::vector<size_t>& cyc) {
  std::vector<std::vector<size_t>> circles;
  std::vector<size_t> remaining = Sorted(cyc);
  while (!remaining.empty()) {
    size_t e = remaining.front();
    std::vector<size_t> p;
    std::vector<int> pv;
    if (!FindPath(g, Without(remaining, e), g.edge(e).v, g.edge(e).u, &p, &pv)) {
      throw InvariantFailure("non-bridge edge outside any circle");
    }
    p.push_back(e);
    std::sort(p.begin(), p.end());
    std::vector<size_t> rest;
    std::set_difference(remaining.begin(), remaining.end(), p.begin(), p.end(),
                        std::back_inserter(rest));
    circles.push_back(p);
    remaining = rest;
  }
  return circles;
}

// Vertex of `circle` where the path (bridges) attaches, or the vertex shared
// with `other` when there is no path.
int AttachmentVertex(const BidirectedGraph& g, const std::vector<size_t>& circle,
                     const std::vector<size_t>& bridges,
                     const std::vector<size_t>& halfedges,
                     const std::vector<size_t>& other) {
  std::set<int> on_circle;
  for (size_t e : circle) {
    on_circle.insert(g.edge(e).u);
    on_circle.insert(g.edge(e).v);
  }
  for (int x : on_circle) {
    for (size_t e : bridges) {
      if (g.edge(e).Touches(x)) return x;
    }
  }
  for (int x : on_circle) {
    for (size_t e : halfedges) {
      if (g.edge(e).Touches(x)) return x;
    }
    for (size_t e : other) {
      if (g.edge(e).Touches(x)) return x;
    }
  }
  throw InvariantFailure("circle has no attachment vertex");
}

// Rotates a closed walk so that its occurrence `k` comes first.
Walk RotateClosed(const BidirectedGraph& g, const Walk& w, size_t k) {
  int base = ClosingVertex(g, w);
  if (base < 0) throw InvariantFailure("rotating an open walk");
  const size_t l = w.edges.size();
  std::vector<int> junction = w.vertices;
  junction.push_back(base);
  Walk r;
  for (size_t i = 0; i < l; ++i) r.edges.push_back(w.edges[(k + i) % l]);
  for (size_t i = 0; i + 1 < l; ++i) r.vertices.push_back(junction[(k + i) % l]);
  return r;
}

Walk PositiveCircleWalk(const BidirectedGraph& g,
                        const std::vector<size_t>& circle, size_t e0) {
  const BiEdge& edge = g.edge(e0);
  auto neighbour = [&](int x) {
    for (size_t f : CircleEdgesAt(g, circle, x)) {
      if (f != e0) return f;
    }
    throw InvariantFailure("circle edge without neighbour");
  };
  size_t fa = neighbour(edge.u), fb = neighbour(edge.v);
  // v1 is the vertex reached by e0.
  int v1;
  if (fa != fb) {
    v1 = fa < fb ? edge.u : edge.v;
  } else {
    v1 = std::min(edge.u, edge.v);
  }
  int from = edge.Other(v1);
  WalkBuilder b(g, e0, from);
  TraverseCircle(g, circle, from, e0, &b, /*first_is_start=*/true);
  return b.Finish();
}

}  // namespace

std::string CircuitKindName(CircuitKind kind) {
  switch (kind) {
    case CircuitKind::kT1: return "T1";
    case CircuitKind::kT2: return "T2";
    case CircuitKind::kT3: return "T3";
    case CircuitKind::kT4: return "T4";
  }
  return "?";
}

int CircleSign(const BidirectedGraph& g, const std::vector<size_t>& edges) {
  int s = 1;
  for (size_t e : edges) s *= g.edge(e).Sign();
  return s;
}

bool IsPseudoForest(const BidirectedGraph& g, const std::vector<size_t>& edges) {
  std::set<size_t> distinct(edges.begin(), edges.end());
  if (distinct.size() != edges.size()) return false;
  UnionFind uf(g.vertex_count());
  std::map<int, ComponentShape> shapes = Shapes(g, edges, &uf);
  bool needs_sign = false;
  for (const auto& [root, s] : shapes) {
    if (s.ordinary == s.vertices - 1 && s.halfedges <= 1) continue;
    if (s.ordinary == s.vertices && s.halfedges == 0) {
      needs_sign = true;
      continue;
    }
    return false;
  }
  if (!needs_sign) return true;
  std::vector<size_t> tree, rest;
  SpanningForest(g, Sorted(edges), &tree, &rest);
  std::vector<int> psi = Potentials(g, tree);
  for (size_t e : rest) {
    if (FundamentalCircleSign(g, psi, e) > 0) return false;
  }
  return true;
}

CaseType ClassifyCase(const BidirectedGraph& g) {
  if (!g.IsConnected()) throw ValidationError("graph is not connected");
  for (const BiEdge& e : g.edges()) {
    if (e.is_halfedge()) return CaseType::kCase2;
  }
  std::vector<size_t> all(g.edge_count());
  std::iota(all.begin(), all.end(), 0);
  std::vector<size_t> tree, rest;
  SpanningForest(g, all, &tree, &rest);
  std::vector<int> psi = Potentials(g, tree);
  for (size_t e : rest) {
    if (FundamentalCircleSign(g, psi, e) < 0) return CaseType::kCase3;
  }
  return CaseType::kCase1;
}

std::vector<size_t> MaximalPseudoForest(const BidirectedGraph& g) {
  CaseType c = ClassifyCase(g);
  std::vector<size_t> all(g.edge_count());
  std::iota(all.begin(), all.end(), 0);
  std::vector<size_t> tree, rest;
  SpanningForest(g, all, &tree, &rest);
  std::vector<size_t> forest = tree;
  if (c == CaseType::kCase2) {
    for (size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).is_halfedge()) {
        forest.push_back(e);
        break;
      }
    }
  } else if (c == CaseType::kCase3) {
    std::vector<int> psi = Potentials(g, tree);
    for (size_t e : rest) {
      if (FundamentalCircleSign(g, psi, e) < 0) {
        forest.push_back(e);
        break;
      }
    }
  }
  return Sorted(forest);
}

void ValidatePseudoForest(const BidirectedGraph& g,
                          const std::vector<size_t>& forest) {
  for (size_t e : forest) {
    if (e >= g.edge_count()) throw ValidationError("forest uses unknown edge");
  }
  if (!IsPseudoForest(g, forest)) {
    throw ValidationError("edge set {" + EdgeSetToString(Sorted(forest)) +
                          "} is not a signed pseudo-forest");
  }
  CaseType c = ClassifyCase(g);
  const size_t d = g.vertex_count();
  size_t halfedges = 0;
  for (size_t e : forest) halfedges += g.edge(e).is_halfedge();
  const size_t expected_size = c == CaseType::kCase1 ? d - 1 : d;
  const size_t expected_halfedges = c == CaseType::kCase2 ? 1 : 0;
  UnionFind uf(g.vertex_count());
  std::map<int, ComponentShape> shapes = Shapes(g, forest, &uf);
  bool spanning = d <= 1 || (shapes.size() == 1 &&
                             shapes.begin()->second.vertices == static_cast<int>(d));
  if (forest.size() != expected_size || halfedges != expected_halfedges ||
      !spanning) {
    const char* shape = c == CaseType::kCase1   ? "a spanning tree"
                        : c == CaseType::kCase2 ? "a spanning halfedge-tree"
                                                : "a spanning pseudo-tree";
    throw ValidationError("forest must be " + std::string(shape) +
                          " for this graph");
  }
}

std::vector<size_t> NegativeCircleOf(const BidirectedGraph& g,
                                     const std::vector<size_t>& forest) {
  std::vector<size_t> tree, rest;
  SpanningForest(g, Sorted(forest), &tree, &rest);
  for (size_t e : rest) {
    std::vector<size_t> path;
    std::vector<int> pv;
    FindPath(g, tree, g.edge(e).u, g.edge(e).v, &path, &pv);
    path.push_back(e);
    if (CircleSign(g, path) < 0) return Sorted(path);
  }
  return {};
}

std::optional<CircuitKind> ClassifyCircuit(const BidirectedGraph& g,
                                           const std::vector<size_t>& edges) {
  if (edges.empty() || IsPseudoForest(g, edges)) return std::nullopt;
  for (size_t e : edges) {
    if (!IsPseudoForest(g, Without(edges, e))) return std::nullopt;
  }
  size_t halfedges = 0;
  std::set<int> vertices;
  for (size_t e : edges) {
    const BiEdge& edge = g.edge(e);
    vertices.insert(edge.u);
    if (edge.is_halfedge()) {
      ++halfedges;
    } else {
      vertices.insert(edge.v);
    }
  }
  if (halfedges == 2) return CircuitKind::kT4;
  if (halfedges == 1) return CircuitKind::kT3;
  if (edges.size() == vertices.size()) return CircuitKind::kT1;
  return CircuitKind::kT2;
}

Walk CanonicalWalk(const BidirectedGraph& g, const std::vector<size_t>& edges_in,
                   std::optional<size_t> start) {
  std::vector<size_t> edges = Sorted(edges_in);
  std::optional<CircuitKind> kind = ClassifyCircuit(g, edges);
  if (!kind) {
    throw ValidationError("edge set {" + EdgeSetToString(edges) +
                          "} is not a circuit");
  }
  if (start && !std::binary_search(edges.begin(), edges.end(), *start)) {
    throw ValidationError("start edge is not in the circuit");
  }
  std::vector<size_t> halfedges, ordinary;
  for (size_t e : edges) {
    (g.edge(e).is_halfedge() ? halfedges : ordinary).push_back(e);
  }

  if (*kind == CircuitKind::kT1) {
    return PositiveCircleWalk(g, edges, start ? *start : edges.front());
  }

  if (*kind == CircuitKind::kT4) {
    size_t first = halfedges[0], last = halfedges[1];
    if (start) {
      if (!g.edge(*start).is_halfedge()) {
        throw ValidationError("a two-halfedge walk must start at a halfedge");
      }
      if (*start == last) std::swap(first, last);
    }
    std::vector<size_t> path;
    std::vector<int> pv;
    if (!FindPath(g, ordinary, g.edge(first).u, g.edge(last).u, &path, &pv)) {
      throw InvariantFailure("halfedges are not joined by a path");
    }
    WalkBuilder b = WalkBuilder::FromHalfedge(g, first);
    for (size_t e : path) b.Step(e);
    b.Step(last);
    return b.Finish();
  }

  std::vector<size_t> bridges, cyclic;
  for (size_t e : ordinary) {
    (IsBridge(g, edges, e) ? bridges : cyclic).push_back(e);
  }
  std::vector<std::vector<size_t>> circles = SplitCircles(g, cyclic);

  if (*kind == CircuitKind::kT3) {
    size_t h = halfedges[0];
    if (start && *start != h) {
      throw ValidationError("a halfedge-circle walk must start at the halfedge");
    }
    if (circles.size() != 1) throw InvariantFailure("malformed T3 circuit");
    const std::vector<size_t>& circle = circles[0];
    int u0 = AttachmentVertex(g, circle, bridges, halfedges, {});
    std::vector<size_t> path;
    std::vector<int> pv;
    if (!FindPath(g, bridges, g.edge(h).u, u0, &path, &pv)) {
      throw InvariantFailure("halfedge is not joined to the circle");
    }
    WalkBuilder b = WalkBuilder::FromHalfedge(g, h);
    for (size_t e : path) b.Step(e);
    TraverseCircle(g, circle, u0, CircleEdgesAt(g, circle, u0).front(), &b,
                   /*first_is_start=*/false);
    for (size_t i = path.size(); i-- > 0;) b.Step(path[i]);
    b.Step(h);
    return b.Finish();
  }

  // T2.
  if (circles.size() != 2) throw InvariantFailure("malformed T2 circuit");
  int x1 = AttachmentVertex(g, circles[0], bridges, {}, circles[1]);
  int x2 = AttachmentVertex(g, circles[1], bridges, {}, circles[0]);
  std::vector<size_t> path;
  std::vector<int> pv;
  if (!FindPath(g, bridges, x1, x2, &path, &pv)) {
    throw InvariantFailure("circles are not joined by a path");
  }
  size_t f1 = CircleEdgesAt(g, circles[0], x1).front();
  WalkBuilder b(g, f1, x1);
  TraverseCircle(g, circles[0], x1, f1, &b, /*first_is_start=*/true);
  for (size_t e : path) b.Step(e);
  TraverseCircle(g, circles[1], x2, CircleEdgesAt(g, circles[1], x2).front(),
                 &b, /*first_is_start=*/false);
  for (size_t i = path.size(); i-- > 0;) b.Step(path[i]);
  Walk w = b.Finish();
  if (start) {
    auto it = std::find(w.edges.begin(), w.edges.end(), *start);
    if (std::count(w.edges.begin(), w.edges.end(), *start) != 1) {
      throw ValidationError("start edge must lie on a circle of the circuit");
    }
    w = RotateClosed(g, w, it - w.edges.begin());
  }
  return w;
}

SignedCircuit MakeCircuit(const BidirectedGraph& g, std::vector<size_t> edges,
                          Walk walk) {
  edges = Sorted(edges);
  std::optional<CircuitKind> kind = ClassifyCircuit(g, edges);
  if (!kind) {
    throw ValidationError("edge set {" + EdgeSetToString(edges) +
                          "} is not a circuit");
  }
  SignedCircuit c;
  c.kind = *kind;
  c.edges = std::move(edges);
  c.rho = RhoSigns(g, walk);
  c.walk = std::move(walk);
  c.vector = WalkVector(g, c.walk);
  return c;
}

std::vector<SignedCircuit> CircuitsStructural(const BidirectedGraph& g,
                                              size_t limit) {
  const size_t n = g.edge_count();
  if (n > limit) {
    throw LimitExceeded("circuit enumeration over " + std::to_string(n) +
                        " edges exceeds limit " + std::to_string(limit));
  }
  std::vector<std::vector<size_t>> supports;
  std::vector<size_t> current;
  std::function<void(size_t)> extend = [&](size_t next) {
    for (size_t j = next; j < n; ++j) {
      current.push_back(j);
      if (IsPseudoForest(g, current)) {
        extend(j + 1);
      } else if (ClassifyCircuit(g, current)) {
        supports.push_back(current);
      }
      current.pop_back();
    }
  };
  extend(0);
  std::sort(supports.begin(), supports.end());
  std::vector<SignedCircuit> out;
  for (const std::vector<size_t>& s : supports) {
    out.push_back(MakeCircuit(g, s, CanonicalWalk(g, s)));
  }
  return out;
}

std::vector<size_t> FundamentalCircuitSupport(const BidirectedGraph& g,
                                              const std::vector<size_t>& forest,
                                              size_t epsilon) {
  if (std::find(forest.begin(), forest.end(), epsilon) != forest.end()) {
    throw ValidationError("edge e" + std::to_string(epsilon + 1) +
                          " belongs to the pseudo-forest");
  }
  std::vector<size_t> extended = forest;
  extended.push_back(epsilon);
  if (IsPseudoForest(g, extended)) {
    throw ValidationError("pseudo-forest is not maximal");
  }
  std::vector<size_t> support{epsilon};
  for (size_t f : forest) {
    if (IsPseudoForest(g, Without(extended, f))) support.push_back(f);
  }
  return Sorted(support);
}

SignedCircuit FundamentalCircuit(const BidirectedGraph& g,
                                 const std::vector<size_t>& forest,
                                 size_t epsilon) {
  std::vector<size_t> support = FundamentalCircuitSupport(g, forest, epsilon);
  std::optional<CircuitKind> kind = ClassifyCircuit(g, support);
  if (!kind) throw InvariantFailure("fundamental circuit is not a circuit");
  std::optional<size_t> start;
  if (*kind == CircuitKind::kT1 || *kind == CircuitKind::kT2 ||
      (*kind == CircuitKind::kT4 && g.edge(epsilon).is_halfedge())) {
    start = epsilon;
  }
  return MakeCircuit(g, support, CanonicalWalk(g, support, start));
}

std::vector<std::vector<size_t>> AllCircles(const BidirectedGraph& g,
                                            size_t limit) {
  const size_t n = g.edge_count();
  if (n > limit) {
    throw LimitExceeded("circle enumeration over " + std::to_string(n) +
                        " edges exceeds limit " + std::to_string(limit));
  }
  std::vector<std::vector<size_t>> incident = g.IncidenceLists();
  std::vector<std::vector<size_t>> circles;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<size_t> path;
  // Each circle is found once: from its lowest edge e0 = {a, b}, as the
  // unique path from b back to a through higher edges.
  for (size_t e0 = 0; e0 < n; ++e0) {
    const BiEdge& first = g.edge(e0);
    if (first.is_halfedge()) continue;
    const int target = first.u;
    std::function<void(int)> dfs = [&](int x) {
      for (size_t e : incident[x]) {
        if (e <= e0 || g.edge(e).is_halfedge()) continue;
        if (std::find(path.begin(), path.end(), e) != path.end()) continue;
        int y = g.edge(e).Other(x);
        if (y == target) {
          std::vector<size_t> circle = path;
          circle.push_back(e0);
          circle.push_back(e);
          circles.push_back(Sorted(circle));
          continue;
        }
        if (on_path[y]) continue;
        on_path[y] = true;
        path.push_back(e);
        dfs(y);
        path.pop_back();
        on_path[y] = false;
      }
    };
    on_path[first.u] = true;
    on_path[first.v] = true;
    dfs(first.v);
    on_path[first.u] = false;
    on_path[first.v] = false;
  }
  std::sort(circles.begin(), circles.end());
  return circles;
}

}  // namespace signed_toric
