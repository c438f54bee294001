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

#include "signed_toric/signed_weights.h"

#include <algorithm>
#include <set>
#include <string>

#include "signed_toric/errors.h"

namespace signed_toric {
namespace {

std::vector<size_t> ToLocal(const PosetComponent& c,
                            const std::vector<size_t>& global) {
  std::vector<size_t> local;
  for (size_t e : global) {
    auto it = std::lower_bound(c.edges.begin(), c.edges.end(), e);
    if (it != c.edges.end() && *it == e) local.push_back(it - c.edges.begin());
  }
  return local;
}

std::vector<size_t> ToGlobal(const PosetComponent& c,
                             const std::vector<size_t>& local) {
  std::vector<size_t> global;
  for (size_t e : local) global.push_back(c.edges[e]);
  std::sort(global.begin(), global.end());
  return global;
}

// Checks a caller-supplied walk for the fundamental circuit of its single
// non-forest edge and returns that circuit.
SignedCircuit CheckedWalkCircuit(const BidirectedGraph& g,
                                 const std::vector<size_t>& forest,
                                 const Walk& walk, size_t index) {
  const std::string name = "walk " + std::to_string(index + 1);
  try {
    ValidateWalk(g, walk);
  } catch (const ValidationError& e) {
    throw ValidationError(name + ": " + e.what());
  }
  std::set<size_t> outside;
  for (size_t e : walk.edges) {
    if (!std::binary_search(forest.begin(), forest.end(), e)) outside.insert(e);
  }
  if (outside.size() != 1) {
    throw ValidationError(name + " must use exactly one edge outside the forest");
  }
  size_t epsilon = *outside.begin();
  std::vector<size_t> support = FundamentalCircuitSupport(g, forest, epsilon);
  IntVector x = WalkVector(g, walk);
  if (!IsZeroVector(Multiply(g.IncidenceMatrix(), x))) {
    throw ValidationError(name + " does not give a kernel vector");
  }
  if (VectorGcd(x) != 1) throw ValidationError(name + " vector is not primitive");
  std::vector<size_t> nonzero;
  for (size_t e = 0; e < x.size(); ++e) {
    if (x[e] != 0) nonzero.push_back(e);
  }
  if (nonzero != support) {
    throw ValidationError(name + " does not traverse the fundamental circuit {" +
                          EdgeSetToString(support) + "}");
  }
  return MakeCircuit(g, support, walk);
}

}  // namespace

ClassGroup ClassGroupSigned(const BidirectedGraph& g) {
  ClassGroup group;
  for (const PosetComponent& c : DecomposeGraph(g)) {
    const size_t e = c.edges.size();
    const size_t d = c.vertices.size();
    CaseType type = ClassifyCase(c.graph);
    group.free_rank += type == CaseType::kCase1 ? e + 1 - d : e - d;
    if (type == CaseType::kCase3) group.torsion.push_back(2);
  }
  return group;
}

SignedWeights ComputeSignedWeights(const BidirectedGraph& g,
                                   const std::optional<std::vector<size_t>>& forest,
                                   const std::vector<Walk>& walks) {
  SignedWeights out;
  if (forest) {
    for (size_t e : *forest) {
      if (e >= g.edge_count()) throw ValidationError("forest uses unknown edge");
    }
  }
  for (const PosetComponent& c : DecomposeGraph(g)) {
    ComponentInfo info;
    info.case_type = ClassifyCase(c.graph);
    info.vertices = c.vertices;
    info.edges = c.edges;
    std::vector<size_t> local;
    if (forest) {
      local = ToLocal(c, *forest);
      ValidatePseudoForest(c.graph, local);
    } else {
      local = MaximalPseudoForest(c.graph);
    }
    info.forest = ToGlobal(c, local);
    if (info.case_type == CaseType::kCase3) {
      info.negative_circle = ToGlobal(c, NegativeCircleOf(c.graph, local));
    }
    out.forest.insert(out.forest.end(), info.forest.begin(), info.forest.end());
    out.components.push_back(std::move(info));
  }
  std::sort(out.forest.begin(), out.forest.end());

  std::vector<size_t> outside;
  for (size_t e = 0; e < g.edge_count(); ++e) {
    if (!std::binary_search(out.forest.begin(), out.forest.end(), e)) {
      outside.push_back(e);
    }
  }
  if (walks.empty()) {
    for (size_t e : outside) {
      out.epsilons.push_back(e);
      out.fundamental.push_back(FundamentalCircuit(g, out.forest, e));
    }
  } else {
    for (size_t i = 0; i < walks.size(); ++i) {
      SignedCircuit c = CheckedWalkCircuit(g, out.forest, walks[i], i);
      size_t epsilon = 0;
      for (size_t e : c.edges) {
        if (!std::binary_search(out.forest.begin(), out.forest.end(), e)) {
          epsilon = e;
        }
      }
      if (std::find(out.epsilons.begin(), out.epsilons.end(), epsilon) !=
          out.epsilons.end()) {
        throw ValidationError("two walks for the circuit of e" +
                              std::to_string(epsilon + 1));
      }
      out.epsilons.push_back(epsilon);
      out.fundamental.push_back(std::move(c));
    }
    if (out.epsilons.size() != outside.size()) {
      throw ValidationError("expected one walk for each of the " +
                            std::to_string(outside.size()) +
                            " edges outside the forest");
    }
  }

  const size_t n = g.edge_count();
  const size_t t = out.epsilons.size();
  WeightSystem& w = out.weights;
  w.group.free_rank = t;
  w.free_part = IntMatrix(t, n);
  for (size_t i = 0; i < t; ++i) {
    for (size_t e = 0; e < n; ++e) w.free_part(i, e) = out.fundamental[i].vector[e];
  }
  std::vector<IntVector> torsion_rows;
  for (const ComponentInfo& info : out.components) {
    if (info.case_type != CaseType::kCase3) continue;
    IntVector row(n);
    for (size_t e : info.negative_circle) row[e] = 1;
    torsion_rows.push_back(row);
    w.group.torsion.push_back(2);
  }
  w.torsion_part = IntMatrix::FromRows(torsion_rows, n);
  return out;
}

ConicPolytope ConicPolytopeSigned(const BidirectedGraph& g,
                                  const SignedWeights& w, size_t limit) {
  const size_t t = w.epsilons.size();
  std::vector<int> coordinate(g.edge_count(), -1);
  std::vector<int> epsilon_rho(t, 0);
  for (size_t i = 0; i < t; ++i) {
    coordinate[w.epsilons[i]] = static_cast<int>(i);
    const SignedCircuit& c = w.fundamental[i];
    for (size_t k = 0; k < c.walk.edges.size(); ++k) {
      if (c.walk.edges[k] == w.epsilons[i]) epsilon_rho[i] = c.rho[k];
    }
  }
  ConicPolytope p;
  p.ambient_dim = t;
  std::vector<SignedCircuit> circuits = CircuitsStructural(g, limit);
  for (size_t k = 0; k < circuits.size(); ++k) {
    const SignedCircuit& c = circuits[k];
    Facet f;
    f.circuit_index = k;
    f.functional.assign(t, 0);
    f.lower = 0;
    f.upper = 0;
    for (size_t occ = 0; occ < c.walk.edges.size(); ++occ) {
      int rho = c.rho[occ];
      (rho > 0 ? f.upper : f.lower) += rho;
      int i = coordinate[c.walk.edges[occ]];
      if (i >= 0) f.functional[i] += rho * epsilon_rho[i];
    }
    p.facets.push_back(std::move(f));
  }
  return p;
}

}  // namespace signed_toric
