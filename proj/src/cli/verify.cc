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

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "signed_toric/balance.h"
#include "signed_toric/class_group.h"
#include "signed_toric/cli/commands.h"
#include "signed_toric/conic.h"
#include "signed_toric/gorenstein.h"
#include "signed_toric/matroid.h"
#include "signed_toric/orientations.h"
#include "signed_toric/signed_poset.h"
#include "signed_toric/signed_weights.h"
#include "signed_toric/subset_sums.h"
#include "signed_toric/type_a.h"

namespace signed_toric::cli {
namespace {

class Checks {
 public:
  void Add(const std::string& name, bool ok, const std::string& detail = "") {
    Json c;
    c["name"] = name;
    c["ok"] = ok;
    c["detail"] = detail;
    list_.push_back(c);
    all_ok_ = all_ok_ && ok;
  }
  const Json& list() const { return list_; }
  bool ok() const { return all_ok_; }

 private:
  Json list_ = Json::array();
  bool all_ok_ = true;
};

std::string IntText(const Integer& x) { return x.get_str(); }

std::pair<std::vector<size_t>, IntVector> Normalized(std::vector<size_t> support,
                                                      IntVector v) {
  if (!support.empty() && v[support.front()] < 0) {
    for (Integer& x : v) x = -x;
  }
  return {std::move(support), std::move(v)};
}

bool SameRegion(const ConicPolytope& a, const ConicPolytope& b, std::string* detail) {
  for (Closure closure : {Closure::kOpen, Closure::kClosed}) {
    for (int t = 1; t <= 3; ++t) {
      if (LatticePoints(a, closure, t) != LatticePoints(b, closure, t)) {
        *detail = std::string(closure == Closure::kOpen ? "open" : "closed") +
                  " points differ at dilation " + std::to_string(t);
        return false;
      }
    }
  }
  return true;
}

void EhrhartChecks(const IntMatrix& a, const ConicPolytope& region, size_t limit,
                   Checks* checks) {
  std::vector<Rational> coefficients = EhrhartGaleZonotope(BuildSubsetTable(a, limit));
  std::string detail;
  bool ok = true;
  for (int t = 1; t <= 3 && ok; ++t) {
    Rational value = EvaluatePolynomial(coefficients, t);
    size_t direct = LatticePoints(region, Closure::kClosed, t).size();
    if (value != Rational(Integer(direct))) {
      ok = false;
      detail = "t=" + std::to_string(t) + ": formula " + value.get_str() +
               " vs " + std::to_string(direct);
    }
  }
  checks->Add("Ehrhart polynomial matches dilate counts for t=1,2,3", ok, detail);
  Rational at_minus_one = EvaluatePolynomial(coefficients, -1);
  if (region.ambient_dim % 2 == 1) at_minus_one = -at_minus_one;
  size_t open = LatticePoints(region, Closure::kOpen).size();
  checks->Add("Ehrhart reciprocity gives the open count",
              at_minus_one == Rational(Integer(open)),
              at_minus_one.get_str() + " vs " + std::to_string(open));
}

// Random real points y give conic classes ceil(A^T y); their images must lie
// in the open region.
void RandomConicClassCheck(const IntMatrix& a, const WeightSystem& w,
                           const ConicPolytope& region, std::mt19937_64* rng,
                           Checks* checks) {
  std::uniform_int_distribution<long> numerator(-40, 40);
  std::uniform_int_distribution<long> denominator(1, 7);
  std::string detail;
  bool ok = true;
  for (int sample = 0; sample < 25 && ok; ++sample) {
    RatVector y(a.rows());
    for (Rational& q : y) {
      q = Rational(numerator(*rng), denominator(*rng));
      q.canonicalize();
    }
    IntVector ceil(a.cols());
    for (size_t j = 0; j < a.cols(); ++j) {
      Rational s = 0;
      for (size_t i = 0; i < a.rows(); ++i) s += Rational(a(i, j)) * y[i];
      mpz_cdiv_q(ceil[j].get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    }
    if (!IsConicClass(a, ceil)) {
      ok = false;
      detail = "ceil(A^T y) rejected for " + VectorToString(ceil);
      break;
    }
    ClassElement c = w.Image(ceil);
    if (!Contains(region, c.free, Closure::kOpen)) {
      ok = false;
      detail = "class " + c.ToString() + " of " + VectorToString(ceil) +
               " lies outside the region";
    }
  }
  checks->Add("random conic classes lie in the open region", ok, detail);
}

void BalancedChecks(const Instance& instance, const BidirectedGraph& g,
                    const Integer& count, GorensteinVerdict verdict,
                    const CommandOptions& options, std::mt19937_64* rng,
                    Checks* checks) {
  TypeAReduction red = ToTypeA(g);
  const BidirectedGraph& h = red.reduced;
  checks->Add("reduction is of type A", IsTypeA(h));
  ClassGroup before = ComputeClassGroup(g.IncidenceMatrix());
  ClassGroup after = ComputeClassGroup(h.IncidenceMatrix());
  checks->Add("reduction preserves the class group", before == after,
              before.ToString() + " vs " + after.ToString());
  Integer reduced_count = ConicCountFormula(h.IncidenceMatrix(), options.limit);
  checks->Add("reduction preserves the conic count", reduced_count == count,
              IntText(count) + " vs " + IntText(reduced_count));
  GorensteinVerdict reduced_verdict = GorensteinByWalks(h, options.limit).verdict;
  checks->Add("reduction preserves the Gorenstein verdict", reduced_verdict == verdict,
              VerdictName(verdict) + " vs " + VerdictName(reduced_verdict));

  Orientation reference = ReferenceOrientation(h);
  std::vector<std::pair<int, int>> edges(reference.begin(), reference.end());
  SubsetTable table = BuildSubsetTable(h.IncidenceMatrix(), options.limit);
  bool tutte_ok = true;
  std::string tutte_detail;
  for (auto [x, y] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{0, 2}}) {
    Rational m = MultiplicityTutte(table, x, y);
    Rational t = TutteGraph(h.vertex_count(), edges, x, y, options.limit);
    if (m != t) {
      tutte_ok = false;
      tutte_detail = "at (" + std::to_string(x) + "," + std::to_string(y) +
                     "): " + m.get_str() + " vs " + t.get_str();
    }
  }
  checks->Add("multiplicity Tutte equals graph Tutte", tutte_ok, tutte_detail);

  if (!h.IsConnected()) return;
  // A forest of a disconnected input may close a cycle through the added
  // vertex, so it is only reused for connected inputs.
  SignedWeights sw = ComputeSignedWeights(
      h, g.IsConnected() ? instance.doc.forest : std::nullopt);
  ConicPolytope cycles = CyclePolytope(h, sw.forest, options.limit);
  std::string detail;
  bool same = SameRegion(cycles, ConicPolytopeSigned(h, sw, options.limit), &detail);
  checks->Add("cycle region equals circuit region", same, detail);
  for (int source : {0, h.vertex_count() - 1}) {
    BijectionReport report =
        VerifyBijection(h, source, sw.weights, cycles, options.limit);
    std::string why = report.problems.empty() ? "" : report.problems.front();
    checks->Add("orientations with unique source " + std::to_string(source + 1) +
                    " biject onto lattice points",
                report.ok(), why);
  }
  std::uniform_int_distribution<int> coin(0, 1);
  bool chip_ok = true;
  for (int sample = 0; sample < 20 && chip_ok; ++sample) {
    Orientation o1 = reference, o2 = reference;
    for (size_t e = 0; e < reference.size(); ++e) {
      if (coin(*rng)) std::swap(o1[e].first, o1[e].second);
      if (coin(*rng)) std::swap(o2[e].first, o2[e].second);
    }
    chip_ok = ChipFiringIdentityHolds(h, o1, o2);
  }
  checks->Add("chip-firing identity on random orientation pairs", chip_ok);
}

}  // namespace

Json RunVerify(const Instance& instance, const CommandOptions& options) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = "verify";
  Json input;
  input["kind"] = InputKindName(instance.doc.kind);
  input["dim"] = instance.config.dim();
  input["edges"] = instance.config.size();
  input["notes"] = instance.notes;
  r["input"] = input;
  r["seed"] = options.seed;

  Checks checks;
  std::mt19937_64 rng(options.seed);
  const IntMatrix& a = instance.config.matrix();
  const size_t limit = options.limit;

  checks.Add("strongly convex by circuits", IsStronglyConvex(instance.config, limit));
  WeightSystem gale = ComputeWeightSystem(a);
  std::string why;
  checks.Add("Gale weights are exact", VerifyExactness(a, gale, &why), why);

  SubsetTable table = BuildSubsetTable(a, limit);
  Integer formula = ConicCountFormula(table);
  Rational tutte = MultiplicityTutte(table, 1, 0);
  Integer enumeration = ConicCountEnumeration(instance.config, limit);
  checks.Add("conic counts agree (enumeration, formula, Tutte)",
             enumeration == formula && tutte == formula,
             IntText(enumeration) + ", " + IntText(formula) + ", " + tutte.get_str());

  if (!instance.graph) {
    ConicPolytope region = ComputeConicPolytope(instance.config, gale, limit);
    EhrhartChecks(a, region, limit, &checks);
    RandomConicClassCheck(a, gale, region, &rng, &checks);
    r["checks"] = checks.list();
    r["ok"] = checks.ok();
    return r;
  }

  const BidirectedGraph& g = *instance.graph;
  checks.Add("incidence matrix equals the generator matrix", g.IncidenceMatrix() == a);
  ClassGroup snf = ComputeClassGroup(a);
  ClassGroup cases = ClassGroupSigned(g);
  checks.Add("case formula for the class group matches Smith form", snf == cases,
             cases.ToString() + " vs " + snf.ToString());

  SignedWeights sw = ComputeSignedWeights(g, instance.doc.forest, instance.doc.walks);
  checks.Add("signed weights are exact", VerifyExactness(a, sw.weights, &why), why);
  bool epsilon_ok = true;
  for (size_t i = 0; i < sw.epsilons.size(); ++i) {
    ClassElement beta = sw.weights.Weight(sw.epsilons[i]);
    for (size_t j = 0; j < beta.free.size(); ++j) {
      Integer expected = j == i ? Integer(beta.free[i] > 0 ? 1 : -1) : Integer(0);
      epsilon_ok = epsilon_ok && beta.free[j] == expected;
    }
    epsilon_ok = epsilon_ok && IsZeroVector(beta.torsion);
  }
  checks.Add("weights of the epsilons are signed unit vectors", epsilon_ok);

  std::set<std::pair<std::vector<size_t>, IntVector>> matroid, structural;
  for (const MatroidCircuit& c : Circuits(instance.config, limit)) {
    matroid.insert(Normalized(c.support, c.vector));
  }
  for (const SignedCircuit& c : CircuitsStructural(g, limit)) {
    structural.insert(Normalized(c.edges, c.vector));
  }
  checks.Add("matroid circuits equal signed-graph circuits", matroid == structural,
             std::to_string(matroid.size()) + " vs " + std::to_string(structural.size()));

  ConicPolytope region = ConicPolytopeSigned(g, sw, limit);
  ConicPolytope toric = ComputeConicPolytope(instance.config, sw.weights, limit);
  std::string detail;
  checks.Add("walk region equals circuit-vector region",
             SameRegion(region, toric, &detail), detail);
  Integer signed_count =
      Integer(LatticePoints(region, Closure::kOpen).size()) * sw.weights.group.TorsionOrder();
  checks.Add("walk region count equals the formula", signed_count == formula,
             IntText(signed_count) + " vs " + IntText(formula));
  EhrhartChecks(a, region, limit, &checks);

  GorensteinStatus walks = GorensteinByWalks(g, limit);
  GorensteinStatus by_class = GorensteinByCanonicalClass(sw.weights);
  checks.Add("Gorenstein verdicts agree", walks.verdict == by_class.verdict,
             VerdictName(walks.verdict) + " vs " + VerdictName(by_class.verdict));
  RandomConicClassCheck(a, sw.weights, region, &rng, &checks);

  if (CheckBalance(g).balanced) {
    BalancedChecks(instance, g, formula, walks.verdict, options, &rng, &checks);
  }
  r["checks"] = checks.list();
  r["ok"] = checks.ok();
  return r;
}

}  // namespace signed_toric::cli
