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

// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "signed_toric/balance.h"
#include "signed_toric/class_group.h"
#include "signed_toric/conic.h"
#include "signed_toric/gorenstein.h"
#include "signed_toric/matroid.h"
#include "signed_toric/orientations.h"
#include "signed_toric/signed_circuits.h"
#include "signed_toric/signed_poset.h"
#include "signed_toric/signed_weights.h"
#include "signed_toric/subset_sums.h"
#include "signed_toric/type_a.h"
#include "tests/support/examples.h"
#include "tests/support/oracles.h"

namespace signed_toric::testing {
namespace {

// Collects failed expectations for one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ |= !ok;
  }
  template <typename A, typename B>
  void Equal(const A& a, const B& b, const std::string& what) {
    Expect(a == b, what);
  }
  bool ok() const { return !failed_; }
  std::string detail() const {
    std::string s;
    for (const std::string& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

IntVector V(std::initializer_list<long> x) { return ToIntVector(x); }

std::vector<std::string> SortedFacets(const ConicPolytope& p) {
  std::vector<std::string> out;
  for (const Facet& f : ReduceFacets(p).facets) out.push_back(f.ToString());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void GaleExample(Checker* c) {
  VectorConfig v(4, GaleExampleVectors());
  c->Equal(ComputeClassGroup(v).ToString(), std::string("Z^2"), "class group");
  IntMatrix kernel = GaleExampleKernel();
  WeightSystem w = ComputeWeightSystem(v, &kernel);
  const std::vector<IntVector> beta = {V({1, 0}), V({0, 1}), V({-1, -1}),
                                       V({1, 0}), V({0, 1}), V({-1, -1})};
  for (size_t i = 0; i < 6; ++i) c->Equal(w.Weight(i).free, beta[i], "weight");
  c->Expect(VerifyExactness(v.matrix(), w), "exactness");
  std::vector<MatroidCircuit> cs = Circuits(v);
  std::set<IntVector> got;
  for (const MatroidCircuit& m : cs) got.insert(m.vector);
  c->Equal(got,
           std::set<IntVector>{V({1, -1, 0, 1, -1, 0}), V({0, 1, -1, 0, 1, -1}),
                               V({1, 0, -1, 1, 0, -1})},
           "circuit vectors");
  c->Equal(SortedFacets(ComputeConicPolytope(cs, w)),
           Sorted({"-2 < z1 - z2 < 2", "-2 < z2 < 2", "-2 < z1 < 2"}), "region");
  c->Equal(ConicCountEnumeration(v), Integer(7), "count by enumeration");
  c->Equal(ConicCountFormula(v.matrix()), Integer(7), "count by formula");
  c->Equal(MultiplicityTutte(v.matrix(), 1, 0), Rational(7), "count by Tutte");
}

void P1Weights(Checker* c) {
  BidirectedGraph g = P1Graph();
  c->Equal(ClassGroupSigned(g).ToString(), std::string("Z^3"), "class group");
  SignedWeights sw = ComputeSignedWeights(g, P1Forest(), P1Walks());
  const std::vector<IntVector> beta = {V({0, -1, -1}), V({0, 1, 0}), V({1, -1, -2}),
                                       V({-1, 1, 1}),  V({0, 0, 1}), V({1, 0, 0}),
                                       V({-1, 0, 2})};
  for (size_t e = 0; e < 7; ++e) {
    c->Equal(sw.weights.Weight(e).free, beta[e], "beta_e" + std::to_string(e + 1));
  }
  c->Expect(sw.weights.torsion_part.rows() == 0, "no torsion");
}

void P2Weights(Checker* c) {
  BidirectedGraph g = P2Graph();
  c->Equal(ClassGroupSigned(g).ToString(), std::string("Z^2 x Z/2"), "class group");
  SignedWeights sw = ComputeSignedWeights(g, P2Forest(), P2Walks());
  const std::vector<IntVector> free = {V({-1, 1}), V({1, 0}),  V({-1, -1}),
                                       V({1, 0}),  V({0, -1}), V({0, 1})};
  const std::vector<long> torsion = {1, 1, 1, 0, 1, 0};
  for (size_t e = 0; e < 6; ++e) {
    ClassElement b = sw.weights.Weight(e);
    c->Equal(b.free, free[e], "free part of beta_e" + std::to_string(e + 1));
    c->Equal(b.torsion, V({torsion[e]}), "torsion bit of beta_e" + std::to_string(e + 1));
  }
}

void P2Region(Checker* c) {
  BidirectedGraph g = P2Graph();
  SignedWeights sw = ComputeSignedWeights(g, P2Forest(), P2Walks());
  ConicPolytope p = ConicPolytopeSigned(g, sw);
  c->Equal(SortedFacets(p),
           Sorted({"-2 < z1 < 2", "-2 < z2 < 2", "-3 < z1 - z2 < 3", "-3 < z1 + z2 < 3"}),
           "inequalities");
  std::vector<IntVector> expected;
  for (long x = -1; x <= 1; ++x) {
    for (long y = -1; y <= 1; ++y) expected.push_back(V({x, y}));
  }
  c->Equal(LatticePoints(p, Closure::kOpen), expected, "open lattice points");
  c->Equal(Integer(LatticePoints(p, Closure::kOpen).size()) * sw.weights.group.TorsionOrder(),
           Integer(18), "count from region");
  c->Equal(ConicCountFormula(g.IncidenceMatrix()), Integer(18), "count by formula");
}

void K23Example(Checker* c) {
  BidirectedGraph g = K23Graph();
  SignedWeights sw = ComputeSignedWeights(g, K23Tree());
  const std::vector<IntVector> beta = {V({1, 0}),  V({-1, -1}), V({-1, 0}),
                                       V({1, 1}),  V({0, 1}),   V({0, -1})};
  for (size_t e = 0; e < 6; ++e) c->Equal(sw.weights.Weight(e).free, beta[e], "weight");
  ConicPolytope region = ConicPolytopeSigned(g, sw);
  std::vector<IntVector> points = LatticePoints(region, Closure::kOpen);
  std::set<IntVector> printed = {V({0, 1}),  V({1, 1}),   V({-1, 0}), V({0, 0}),
                                 V({1, 0}),  V({-1, -1}), V({0, -1})};
  c->Equal(std::set<IntVector>(points.begin(), points.end()), printed, "lattice points");
  c->Equal(points.size(), size_t{7}, "point count");
  Orientation ref = ReferenceOrientation(g);
  std::vector<Orientation> all = AcyclicOrientationsUniqueSource(5, ref, 0);
  c->Equal(all.size(), size_t{7}, "orientation count");
  // (A)..(G): agreement sets and their classes.
  std::set<std::pair<std::vector<size_t>, IntVector>> expected = {
      {Edges({1, 2, 3, 4, 5}), V({0, 1})},  {Edges({1, 2, 4, 5}), V({1, 1})},
      {Edges({1, 2, 3, 5}), V({-1, 0})},    {Edges({1, 2, 5}), V({0, 0})},
      {Edges({1, 2, 4, 5, 6}), V({1, 0})},  {Edges({1, 2, 3, 5, 6}), V({-1, -1})},
      {Edges({1, 2, 5, 6}), V({0, -1})}};
  std::set<std::pair<std::vector<size_t>, IntVector>> got;
  for (const Orientation& o : all) {
    got.insert({AgreementSet(ref, o), OrientationToClass(5, ref, o, sw.weights).free});
  }
  c->Equal(got, expected, "orientation to class assignments");
  BijectionReport rep = VerifyBijection(g, 0, sw.weights, CyclePolytope(g, K23Tree()));
  c->Expect(rep.ok(), "bijection verifier");
}

void Reduction(Checker* c) {
  BidirectedGraph g = HasseDiagram(4, ReductionExampleRoots());
  BalanceResult b = CheckBalance(g);
  c->Expect(b.balanced, "balanced");
  c->Equal(b.switching, std::vector<int>{0, 1}, "switching set");
  TypeAReduction r = ToTypeA(g);
  c->Equal(r.reduced_roots, ReductionExampleReduced(), "reduced roots");
}

bool IsBipartite(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [a, b] : edges) {
        if (a != x && b != x) continue;
        int y = a == x ? b : a;
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

void GraphPosets(Checker* c) {
  Rng rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    std::vector<std::pair<int, int>> edges = RandomConnectedGraph(&rng, n, 12);
    SignedPoset p = GraphPoset({n, edges});
    VectorConfig tilde = ExtremalGenerators(CloseUp(p));
    BidirectedGraph g = HasseDiagram(tilde);
    GorensteinStatus s = GorensteinByWalks(g);
    c->Expect(s.verdict != GorensteinVerdict::kNeither, "never Neither");
    c->Equal(s.verdict == GorensteinVerdict::kGorenstein, IsBipartite(n, edges),
             "Gorenstein iff bipartite");
  }
}

std::vector<std::vector<size_t>> SupportsOf(const std::vector<SignedCircuit>& cs) {
  std::vector<std::vector<size_t>> out;
  for (const SignedCircuit& s : cs) out.push_back(s.edges);
  return out;
}

void OracleSuite(Checker* c) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntVector> gens = RandomSignedPosetGenerators(&rng, 5, 10);
    const size_t d = gens.front().size();
    VectorConfig v(d, gens);
    BidirectedGraph g = HasseDiagram(v);
    IntMatrix a = g.IncidenceMatrix();
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    // (a) Circuits, with vectors equal up to sign.
    std::vector<MatroidCircuit> mc = Circuits(v);
    std::vector<SignedCircuit> sc = CircuitsStructural(g);
    std::vector<std::vector<size_t>> ms;
    for (const MatroidCircuit& m : mc) ms.push_back(m.support);
    c->Equal(ms, SupportsOf(sc), "(a) circuit supports" + tag);
    for (size_t k = 0; k < std::min(mc.size(), sc.size()); ++k) {
      IntVector neg = sc[k].vector;
      for (Integer& x : neg) x = -x;
      c->Expect(mc[k].vector == sc[k].vector || mc[k].vector == neg,
                "(a) circuit vectors" + tag);
    }
    // (b) Three counts.
    SubsetTable table = BuildSubsetTable(a);
    Integer formula = ConicCountFormula(table);
    c->Equal(ConicCountEnumeration(v), formula, "(b) enumeration vs formula" + tag);
    c->Equal(MultiplicityTutte(table, 1, 0), Rational(formula), "(b) Tutte vs formula" + tag);
    // (c) Ehrhart.
    SignedWeights sw = ComputeSignedWeights(g);
    ConicPolytope region = ConicPolytopeSigned(g, sw);
    std::vector<Rational> poly = EhrhartGaleZonotope(table);
    for (int t = 1; t <= 3; ++t) {
      c->Equal(EvaluatePolynomial(poly, t),
               Rational(LatticePoints(region, Closure::kClosed, t).size()),
               "(c) dilate " + std::to_string(t) + tag);
    }
    Rational sign = sw.weights.group.free_rank % 2 == 0 ? 1 : -1;
    c->Equal(sign * EvaluatePolynomial(poly, -1),
             Rational(LatticePoints(region, Closure::kOpen).size()), "(c) reciprocity" + tag);
    // (d) Exactness.
    std::string why;
    c->Expect(VerifyExactness(a, sw.weights, &why), "(d) exactness: " + why + tag);
    // (e) Gorenstein routes.
    c->Equal(GorensteinByWalks(g).verdict, GorensteinByCanonicalClass(sw.weights).verdict,
             "(e) Gorenstein verdicts" + tag);
    // (f) Case formula.
    c->Equal(ClassGroupSigned(g), ComputeClassGroup(a), "(f) class group" + tag);
  }
}

std::vector<std::pair<int, int>> Underlying(const BidirectedGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const BiEdge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

void BalancedSuite(Checker* c) {
  Rng rng(9);
  std::vector<std::pair<BidirectedGraph, std::vector<Orientation>>> pools;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<IntVector> gens = RandomBalancedGenerators(&rng, 6, 8);
    TypeAReduction r = ToTypeA(HasseDiagram(gens.front().size(), gens));
    const BidirectedGraph& g = r.reduced;
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    SignedWeights sw = ComputeSignedWeights(g);
    ConicPolytope region = CyclePolytope(g, sw.forest);
    int source = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
    std::vector<Orientation> all =
        AcyclicOrientationsUniqueSource(g.vertex_count(), r.orientation, source);
    size_t points = LatticePoints(region, Closure::kOpen).size();
    Rational tutte = TutteGraph(g.vertex_count(), Underlying(g), 1, 0);
    c->Equal(Rational(all.size()), tutte, "orientations vs T(1,0)" + tag);
    c->Equal(Rational(points), tutte, "lattice points vs T(1,0)" + tag);
    BijectionReport rep = VerifyBijection(g, source, sw.weights, region);
    c->Expect(rep.ok(), "bijection" + tag +
                            (rep.problems.empty() ? "" : ": " + rep.problems.front()));
    pools.push_back({g, all});
  }
  // Chip-firing on random pairs, including orientations with cycles.
  for (int pair = 0; pair < 100; ++pair) {
    auto& [g, all] = pools[pair % pools.size()];
    Orientation o1 = all[rng() % all.size()];
    Orientation o2 = all[rng() % all.size()];
    if (pair % 2 == 1) {
      for (Arc& a : o2) {
        if (rng() % 2) std::swap(a.first, a.second);
      }
    }
    c->Expect(ChipFiringIdentityHolds(g, o1, o2), "chip-firing pair " + std::to_string(pair));
  }
}

// Blanks out comments and string/char literals, keeping line structure.
std::string StripCommentsAndStrings(const std::string& src) {
  std::string out;
  out.reserve(src.size());
  enum { kCode, kLine, kBlock, kString, kChar } state = kCode;
  for (size_t i = 0; i < src.size(); ++i) {
    char ch = src[i];
    char next = i + 1 < src.size() ? src[i + 1] : '\0';
    switch (state) {
      case kCode:
        if (ch == '/' && next == '/') {
          state = kLine;
          ++i;
        } else if (ch == '/' && next == '*') {
          state = kBlock;
          ++i;
        } else if (ch == '"') {
          state = kString;
          out += ' ';
        } else if (ch == '\'' && !(i > 0 && std::isxdigit(static_cast<unsigned char>(src[i - 1])))) {
          state = kChar;
          out += ' ';
        } else {
          out += ch;
        }
        break;
      case kLine:
        if (ch == '\n') {
          state = kCode;
          out += '\n';
        }
        break;
      case kBlock:
        if (ch == '*' && next == '/') {
          state = kCode;
          ++i;
        } else if (ch == '\n') {
          out += '\n';
        }
        break;
      case kString:
      case kChar:
        if (ch == '\\') {
          ++i;
        } else if ((state == kString && ch == '"') || (state == kChar && ch == '\'')) {
          state = kCode;
        } else if (ch == '\n') {
          out += '\n';
        }
        break;
    }
  }
  return out;
}

void NoFloatingPoint(Checker* c) {
  namespace fs = std::filesystem;
  const std::regex forbidden(
      R"((\b\d+\.\d*([eE][+-]?\d+)?[fFlL]?\b)|(\B\.\d+)|(\b\d+[eE][+-]?\d+\b))"
      R"(|\b(float|double)\b|\bmpf_|\bmpf_class\b|get_d\s*\(|<cmath>|<math\.h>)"
      R"(|\bstd::(sqrt|pow|floor|ceil|round|log|exp)\s*\()");
  // The scanner must catch real uses and ignore comments and strings.
  auto flags = [&](const std::string& code) {
    return std::regex_search(StripCommentsAndStrings(code), forbidden);
  };
  c->Expect(flags("double x;") && flags("y = 0.5;") && flags("z = 1e9;") &&
                flags("w = .25f;") && flags("#include <cmath>"),
            "scanner misses floating point");
  c->Expect(!flags("// Version 2.0\nint a = \"1.5\"[0];") && !flags("x = 1'000;"),
            "scanner flags comments or strings");
  size_t scanned = 0;
  for (const char* dir : {"src", "include"}) {
    fs::path root = fs::path(SIGNED_TORIC_SOURCE_DIR) / dir;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
      if (!entry.is_regular_file()) continue;
      std::string ext = entry.path().extension().string();
      if (ext != ".cc" && ext != ".h") continue;
      std::ifstream in(entry.path());
      std::stringstream buf;
      buf << in.rdbuf();
      std::istringstream lines(StripCommentsAndStrings(buf.str()));
      std::string line;
      int number = 0;
      while (std::getline(lines, line)) {
        ++number;
        if (std::regex_search(line, forbidden)) {
          c->Expect(false, entry.path().filename().string() + ":" + std::to_string(number) +
                               ": " + line);
        }
      }
      ++scanned;
    }
  }
  c->Expect(scanned > 10, "core sources found");
}

struct Criterion {
  int number;
  std::string name;
  std::function<void(Checker*)> run;
};

}  // namespace
}  // namespace signed_toric::testing

int main() {
  using namespace signed_toric::testing;
  const std::vector<Criterion> criteria = {
      {1, "six-vector example: class group, weights, circuits, region, count", GaleExample},
      {2, "P1 weights with the given forest and walks", P1Weights},
      {3, "P2 weights including torsion bits", P2Weights},
      {4, "P2 region, open points and conic count", P2Region},
      {5, "K23 weights, points, orientations and bijection", K23Example},
      {6, "reduction to type A", Reduction},
      {7, "graph posets: Q-Gorenstein, Gorenstein iff bipartite", GraphPosets},
      {8, "oracle equivalences on 100 random signed posets", OracleSuite},
      {9, "balanced suite: orientations, points, Tutte, bijection, chip-firing",
       BalancedSuite},
      {10, "no floating point in core sources", NoFloatingPoint},
  };
  int failed = 0;
  for (const Criterion& crit : criteria) {
    Checker c;
    try {
      crit.run(&c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << crit.number << ": "
              << crit.name;
    if (!c.ok()) std::cout << " [" << c.detail() << "]";
    std::cout << std::endl;
    failed += !c.ok();
  }
  return failed == 0 ? 0 : 1;
}
