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

#include "signed_toric/orientations.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "signed_toric/errors.h"

namespace signed_toric {
namespace {

bool Reaches(const std::vector<std::vector<int>>& out, int from, int to) {
  std::vector<bool> seen(out.size(), false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (int y : out[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return false;
}

int CountComponents(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                    unsigned long mask, bool use_mask) {
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count;
  for (size_t k = 0; k < edges.size(); ++k) {
    if (use_mask && !(mask >> k & 1)) continue;
    int a = find(edges[k].first), b = find(edges[k].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

class OrientationSearch {
 public:
  OrientationSearch(int vertex_count, const Orientation& reference, int source)
      : reference_(reference), source_(source), out_(vertex_count),
        indegree_(vertex_count, 0), remaining_(vertex_count, 0) {
    for (const Arc& a : reference) {
      ++remaining_[a.first];
      ++remaining_[a.second];
    }
  }

  std::vector<Orientation> Run() {
    Extend(0);
    return found_;
  }

 private:
  void Extend(size_t k) {
    if (k == reference_.size()) {
      for (size_t v = 0; v < out_.size(); ++v) {
        if (static_cast<int>(v) != source_ && indegree_[v] == 0) return;
      }
      found_.push_back(current_);
      return;
    }
    const Arc& ref = reference_[k];
    for (Arc arc : {ref, Arc{ref.second, ref.first}}) {
      if (arc.second == source_) continue;
      if (Reaches(out_, arc.second, arc.first)) continue;
      Place(arc, +1);
      if (!Stranded(arc.first)) Extend(k + 1);
      Place(arc, -1);
    }
  }

  void Place(const Arc& arc, int step) {
    if (step > 0) {
      out_[arc.first].push_back(arc.second);
      current_.push_back(arc);
    } else {
      out_[arc.first].pop_back();
      current_.pop_back();
    }
    indegree_[arc.second] += step;
    remaining_[arc.first] -= step;
    remaining_[arc.second] -= step;
  }

  // A non-source vertex whose edges are all placed must have an in-edge.
  bool Stranded(int v) const {
    return v != source_ && remaining_[v] == 0 && indegree_[v] == 0;
  }

  const Orientation& reference_;
  int source_;
  std::vector<std::vector<int>> out_;
  std::vector<int> indegree_;
  std::vector<int> remaining_;
  Orientation current_;
  std::vector<Orientation> found_;
};

}  // namespace

std::vector<Orientation> AcyclicOrientationsUniqueSource(
    int vertex_count, const Orientation& reference, int source) {
  if (source < 0 || source >= vertex_count) {
    throw ValidationError("source vertex out of range");
  }
  for (const Arc& a : reference) {
    if (a.first < 0 || a.second < 0 || a.first >= vertex_count ||
        a.second >= vertex_count || a.first == a.second) {
      throw ValidationError("bad edge in orientation");
    }
  }
  std::vector<std::pair<int, int>> edges(reference.begin(), reference.end());
  if (CountComponents(vertex_count, edges, 0, false) != 1) {
    throw ValidationError("graph is not connected");
  }
  return OrientationSearch(vertex_count, reference, source).Run();
}

bool IsAcyclic(int vertex_count, const Orientation& o) {
  std::vector<std::vector<int>> out(vertex_count);
  for (const Arc& a : o) {
    if (Reaches(out, a.second, a.first)) return false;
    out[a.first].push_back(a.second);
  }
  return true;
}

std::vector<size_t> AgreementSet(const Orientation& reference,
                                 const Orientation& o) {
  std::vector<size_t> agree;
  for (size_t k = 0; k < reference.size(); ++k) {
    if (reference[k] == o[k]) agree.push_back(k);
  }
  return agree;
}

IntVector OutDegrees(int vertex_count, const Orientation& o) {
  IntVector out(vertex_count);
  for (const Arc& a : o) out[a.first] += 1;
  return out;
}

ClassElement OrientationToClass(int vertex_count, const Orientation& reference,
                                const Orientation& o, const WeightSystem& w) {
  if (!IsAcyclic(vertex_count, o)) {
    throw ValidationError("orientation has a directed cycle");
  }
  IntVector indicator(reference.size());
  for (size_t k : AgreementSet(reference, o)) indicator[k] = 1;
  return w.Image(indicator);
}

bool ChipFiringIdentityHolds(const BidirectedGraph& g, const Orientation& o1,
                             const Orientation& o2) {
  Orientation reference = ReferenceOrientation(g);
  IntVector diff(g.edge_count());
  for (size_t k : AgreementSet(reference, o1)) diff[k] += 1;
  for (size_t k : AgreementSet(reference, o2)) diff[k] -= 1;
  IntVector lhs = Multiply(g.IncidenceMatrix(), diff);
  IntVector d1 = OutDegrees(g.vertex_count(), o1);
  IntVector d2 = OutDegrees(g.vertex_count(), o2);
  for (size_t v = 0; v < lhs.size(); ++v) {
    if (lhs[v] != d2[v] - d1[v]) return false;
  }
  return true;
}

Rational TutteGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                    const Rational& x, const Rational& y, size_t limit) {
  if (edges.size() > limit) {
    throw LimitExceeded("Tutte polynomial of " + std::to_string(edges.size()) +
                        " edges exceeds the limit " + std::to_string(limit));
  }
  const int full = CountComponents(vertex_count, edges, 0, false);
  const Rational xm = x - 1, ym = y - 1;
  Rational total = 0;
  for (unsigned long mask = 0; mask < (1UL << edges.size()); ++mask) {
    const int c = CountComponents(vertex_count, edges, mask, true);
    const int size = __builtin_popcountl(mask);
    Rational term = 1;
    for (int i = 0; i < c - full; ++i) term *= xm;
    for (int i = 0; i < c + size - vertex_count; ++i) term *= ym;
    total += term;
  }
  return total;
}

BijectionReport VerifyBijection(const BidirectedGraph& g, int source,
                                const WeightSystem& w,
                                const ConicPolytope& region, size_t limit) {
  BijectionReport report;
  Orientation reference = ReferenceOrientation(g);
  const int n = g.vertex_count();
  report.orientations = AcyclicOrientationsUniqueSource(n, reference, source);
  std::map<IntVector, size_t> seen;
  report.injective = true;
  for (size_t k = 0; k < report.orientations.size(); ++k) {
    ClassElement c = OrientationToClass(n, reference, report.orientations[k], w);
    report.classes.push_back(c.free);
    auto [it, inserted] = seen.emplace(c.free, k);
    if (!inserted) {
      report.injective = false;
      report.problems.push_back("orientations " + std::to_string(it->second + 1) +
                                " and " + std::to_string(k + 1) +
                                " share the class " + VectorToString(c.free));
    }
  }
  report.points = LatticePoints(region, Closure::kOpen);
  std::set<IntVector> images(report.classes.begin(), report.classes.end());
  std::set<IntVector> points(report.points.begin(), report.points.end());
  report.onto_points = images == points;
  if (!report.onto_points) {
    for (const IntVector& p : points) {
      if (!images.count(p)) {
        report.problems.push_back("point " + VectorToString(p) + " is not hit");
      }
    }
    for (const IntVector& c : images) {
      if (!points.count(c)) {
        report.problems.push_back("class " + VectorToString(c) +
                                  " lies outside the region");
      }
    }
  }
  std::vector<std::pair<int, int>> edges(reference.begin(), reference.end());
  Rational tutte = TutteGraph(n, edges, 1, 0, limit);
  report.tutte = tutte.get_num();
  report.counts_agree = tutte.get_den() == 1 &&
                        report.tutte == report.orientations.size() &&
                        report.tutte == report.points.size();
  if (!report.counts_agree) {
    report.problems.push_back(
        "counts differ: orientations=" + std::to_string(report.orientations.size()) +
        " points=" + std::to_string(report.points.size()) +
        " tutte=" + report.tutte.get_str());
  }
  return report;
}

}  // namespace signed_toric
