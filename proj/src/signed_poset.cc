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

#include "signed_toric/signed_poset.h"

#include <algorithm>
#include <set>

#include "signed_toric/errors.h"
#include "signed_toric/feasibility.h"

namespace signed_toric {
namespace {

IntVector Negated(const IntVector& v) {
  IntVector n = v;
  for (Integer& x : n) x = -x;
  return n;
}

}  // namespace

bool IsBRoot(const IntVector& v) {
  int nonzero = 0;
  for (const Integer& x : v) {
    if (x == 0) continue;
    if (x != 1 && x != -1) return false;
    ++nonzero;
  }
  return nonzero == 1 || nonzero == 2;
}

std::vector<IntVector> AllBRoots(size_t d) {
  std::vector<IntVector> roots;
  for (size_t i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      IntVector v(d);
      v[i] = s;
      roots.push_back(v);
    }
  }
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i + 1; j < d; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          IntVector v(d);
          v[i] = si;
          v[j] = sj;
          roots.push_back(v);
        }
      }
    }
  }
  return roots;
}

std::string RootToString(const IntVector& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    s += (v[i] > 0 ? "+x" : "-x") + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

SignedPoset::SignedPoset(size_t dim, std::vector<IntVector> roots)
    : dim_(dim), roots_(std::move(roots)) {
  std::set<IntVector> seen;
  for (size_t k = 0; k < roots_.size(); ++k) {
    const IntVector& v = roots_[k];
    if (v.size() != dim_ || !IsBRoot(v)) {
      throw ValidationError("root " + std::to_string(k + 1) +
                            " is not a type-B root in dimension " +
                            std::to_string(dim_));
    }
    if (!seen.insert(v).second) {
      throw ValidationError("duplicate root " + RootToString(v));
    }
  }
}

std::vector<IntVector> PositiveLinearClosure(const std::vector<IntVector>& roots,
                                             size_t d) {
  std::vector<IntVector> out = roots;
  std::set<IntVector> have(roots.begin(), roots.end());
  for (const IntVector& r : AllBRoots(d)) {
    if (have.count(r)) continue;
    if (ConeCoefficients(roots, r)) {
      out.push_back(r);
      have.insert(r);
    }
  }
  return out;
}

SignedPoset CloseUp(const SignedPoset& p) {
  return SignedPoset(p.dim(), PositiveLinearClosure(p.roots(), p.dim()));
}

PosetDiagnostics ValidatePoset(const SignedPoset& p) {
  PosetDiagnostics diag;
  std::set<IntVector> have(p.roots().begin(), p.roots().end());
  for (const IntVector& r : p.roots()) {
    IntVector n = Negated(r);
    if (have.count(n) && r > n) {
      diag.valid = false;
      diag.problems.push_back("antisymmetry: both " + RootToString(n) +
                              " and " + RootToString(r) + " are present");
    }
  }
  for (const IntVector& r : AllBRoots(p.dim())) {
    if (have.count(r)) continue;
    if (ConeCoefficients(p.roots(), r)) {
      diag.valid = false;
      diag.problems.push_back("closure: " + RootToString(r) +
                              " is a nonnegative combination but missing");
    }
  }
  return diag;
}

VectorConfig ExtremalGenerators(const SignedPoset& p) {
  const std::vector<IntVector>& roots = p.roots();
  std::vector<IntVector> kept;
  for (size_t i = 0; i < roots.size(); ++i) {
    std::vector<IntVector> others;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j != i) others.push_back(roots[j]);
    }
    if (!ConeCoefficients(others, roots[i])) kept.push_back(roots[i]);
  }
  // Strong convexity and minimality are re-checked here.
  return VectorConfig(p.dim(), kept);
}

BidirectedGraph HasseDiagram(size_t d, const std::vector<IntVector>& roots) {
  std::vector<BiEdge> edges;
  for (size_t k = 0; k < roots.size(); ++k) {
    const IntVector& v = roots[k];
    if (v.size() != d || !IsBRoot(v)) {
      throw ValidationError("vector " + std::to_string(k + 1) +
                            " is not a type-B root");
    }
    std::vector<int> support;
    for (size_t i = 0; i < d; ++i) {
      if (v[i] != 0) support.push_back(static_cast<int>(i));
    }
    if (support.size() == 1) {
      edges.push_back(BiEdge::Half(support[0], v[support[0]].get_si()));
    } else {
      edges.push_back(BiEdge::Ordinary(support[0], v[support[0]].get_si(),
                                       support[1], v[support[1]].get_si()));
    }
  }
  return BidirectedGraph(static_cast<int>(d), std::move(edges));
}

BidirectedGraph HasseDiagram(const VectorConfig& v) {
  return HasseDiagram(v.dim(), v.vectors());
}

std::vector<IntVector> RootsOfGraph(const BidirectedGraph& g) {
  IntMatrix a = g.IncidenceMatrix();
  std::vector<IntVector> roots;
  for (size_t j = 0; j < a.cols(); ++j) roots.push_back(a.Column(j));
  return roots;
}

SignedPoset GraphPoset(const SimpleGraph& g) {
  std::set<std::pair<int, int>> seen;
  std::vector<IntVector> roots;
  for (auto [a, b] : g.edges) {
    if (a == b) throw ValidationError("loop at vertex " + std::to_string(a + 1));
    if (a < 0 || b < 0 || a >= g.vertex_count || b >= g.vertex_count) {
      throw ValidationError("edge endpoint out of range");
    }
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw ValidationError("duplicate edge {" + std::to_string(a + 1) + "," +
                            std::to_string(b + 1) + "}");
    }
    IntVector v(g.vertex_count);
    v[a] = 1;
    v[b] = 1;
    roots.push_back(v);
  }
  return SignedPoset(g.vertex_count, roots);
}

std::vector<PosetComponent> DecomposeGraph(const BidirectedGraph& g) {
  std::vector<int> component;
  const int count = g.Components(&component);
  std::vector<PosetComponent> out(count);
  std::vector<int> local(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    PosetComponent& c = out[component[v]];
    local[v] = static_cast<int>(c.vertices.size());
    c.vertices.push_back(v);
  }
  std::vector<std::vector<BiEdge>> edges(count);
  for (size_t j = 0; j < g.edge_count(); ++j) {
    BiEdge e = g.edge(j);
    int c = component[e.u];
    out[c].edges.push_back(j);
    e.u = local[e.u];
    if (!e.is_halfedge()) e.v = local[e.v];
    edges[c].push_back(e);
  }
  for (int c = 0; c < count; ++c) {
    out[c].graph = BidirectedGraph(static_cast<int>(out[c].vertices.size()),
                                   std::move(edges[c]));
  }
  return out;
}

std::vector<SignedPoset> Decompose(const SignedPoset& p) {
  VectorConfig tilde = ExtremalGenerators(p);
  BidirectedGraph g = HasseDiagram(tilde);
  std::vector<SignedPoset> out;
  for (const PosetComponent& c : DecomposeGraph(g)) {
    std::vector<IntVector> roots = RootsOfGraph(c.graph);
    out.push_back(SignedPoset(c.vertices.size(),
                              PositiveLinearClosure(roots, c.vertices.size())));
  }
  return out;
}

}  // namespace signed_toric
