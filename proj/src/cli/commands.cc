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

#include "signed_toric/cli/commands.h"

#include <sstream>

#include "signed_toric/class_group.h"
#include "signed_toric/conic.h"
#include "signed_toric/errors.h"
#include "signed_toric/gorenstein.h"
#include "signed_toric/normal_form.h"
#include "signed_toric/orientations.h"
#include "signed_toric/signed_poset.h"
#include "signed_toric/signed_weights.h"
#include "signed_toric/subset_sums.h"
#include "signed_toric/type_a.h"

namespace signed_toric::cli {
namespace {

std::string EdgeLabel(size_t e) { return "e" + std::to_string(e + 1); }

Json EdgeList(const std::vector<size_t>& edges) {
  Json out = Json::array();
  for (size_t e : edges) out.push_back(EdgeLabel(e));
  return out;
}

Json VertexList(const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int v : vertices) out.push_back(v + 1);
  return out;
}

std::string RationalText(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string Join(const Json& items, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i].is_string() ? items[i].get<std::string>() : items[i].dump();
  }
  return s;
}

const BidirectedGraph& RequireGraph(const Instance& instance,
                                    const std::string& command) {
  if (!instance.graph) {
    throw ValidationError("'" + command + "' needs a signed poset, graph or poset input");
  }
  return *instance.graph;
}

std::string GeneratorText(const Instance& instance, size_t e) {
  const IntVector& v = instance.config[e];
  return instance.graph ? RootToString(v) : VectorToString(v);
}

Json ReportHead(const std::string& command, const Instance& instance) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  Json input;
  input["kind"] = InputKindName(instance.doc.kind);
  input["dim"] = instance.config.dim();
  input["edges"] = instance.config.size();
  input["notes"] = instance.notes;
  r["input"] = input;
  return r;
}

// The weights used by the reports: signed weights for graph inputs, Gale
// weights otherwise.
struct Weights {
  std::optional<SignedWeights> signed_weights;
  WeightSystem system;
};

Weights ComputeWeights(const Instance& instance) {
  Weights w;
  if (instance.graph) {
    w.signed_weights =
        ComputeSignedWeights(*instance.graph, instance.doc.forest, instance.doc.walks);
    w.system = w.signed_weights->weights;
  } else {
    w.system = ComputeWeightSystem(instance.config);
  }
  return w;
}

ConicPolytope Region(const Instance& instance, const Weights& w, size_t limit) {
  if (w.signed_weights) {
    return ConicPolytopeSigned(*instance.graph, *w.signed_weights, limit);
  }
  return ComputeConicPolytope(instance.config, w.system, limit);
}

Json ClassGroupCommand(const Instance& instance) {
  Json r = ReportHead("classgroup", instance);
  const IntMatrix& a = instance.config.matrix();
  ClassGroup group = ComputeClassGroup(a);
  r["group"] = group.ToString();
  r["free_rank"] = group.free_rank;
  r["torsion"] = VectorJson(group.torsion);
  Json diagonal = Json::array();
  for (const Integer& s : SmithNormalForm(a.Transpose()).diagonal) {
    diagonal.push_back(IntegerJson(s));
  }
  r["snf_diagonal"] = diagonal;
  bool ok = true;
  if (instance.graph) {
    ClassGroup formula = ClassGroupSigned(*instance.graph);
    r["case_formula"] = formula.ToString();
    Json components = Json::array();
    for (const PosetComponent& c : DecomposeGraph(*instance.graph)) {
      Json item;
      item["vertices"] = VertexList(c.vertices);
      item["case"] = static_cast<int>(ClassifyCase(c.graph));
      components.push_back(item);
    }
    r["components"] = components;
    ok = formula == group;
  }
  r["ok"] = ok;
  return r;
}

Json WeightsCommand(const Instance& instance) {
  Json r = ReportHead("weights", instance);
  Weights w = ComputeWeights(instance);
  r["group"] = w.system.group.ToString();
  if (w.signed_weights) {
    const SignedWeights& sw = *w.signed_weights;
    r["forest"] = EdgeList(sw.forest);
    Json walks = Json::array();
    for (size_t i = 0; i < sw.epsilons.size(); ++i) {
      Json item;
      item["epsilon"] = EdgeLabel(sw.epsilons[i]);
      item["walk"] = sw.fundamental[i].walk.ToString();
      walks.push_back(item);
    }
    r["walks"] = walks;
  }
  Json edges = Json::array();
  for (size_t e = 0; e < instance.config.size(); ++e) {
    ClassElement beta = w.system.Weight(e);
    Json item;
    item["edge"] = EdgeLabel(e);
    item["generator"] = GeneratorText(instance, e);
    item["free"] = VectorJson(beta.free);
    item["torsion"] = VectorJson(beta.torsion);
    edges.push_back(item);
  }
  r["weights"] = edges;
  std::string why;
  bool exact = VerifyExactness(instance.config.matrix(), w.system, &why);
  r["exact"] = exact;
  if (!exact) r["problem"] = why;
  r["ok"] = exact;
  return r;
}

Json ConicCommand(const Instance& instance, const CommandOptions& options) {
  Json r = ReportHead("conic", instance);
  Weights w = ComputeWeights(instance);
  ConicPolytope full = Region(instance, w, options.limit);
  ConicPolytope p = ReduceFacets(full);
  r["ambient_dim"] = p.ambient_dim;
  Json facets = Json::array();
  for (const Facet& f : p.facets) facets.push_back(f.ToString());
  r["inequalities"] = facets;
  if (options.points || options.count) {
    std::vector<IntVector> points = LatticePoints(p, Closure::kOpen);
    if (options.points) {
      Json list = Json::array();
      for (const IntVector& z : points) list.push_back(VectorJson(z));
      r["points"] = list;
    }
    if (options.count) {
      r["torsion_order"] = IntegerJson(w.system.group.TorsionOrder());
      r["count"] = IntegerJson(Integer(points.size()) * w.system.group.TorsionOrder());
    }
  }
  r["ok"] = true;
  return r;
}

struct Counts {
  Integer enumeration;
  Integer formula;
  Rational tutte;
  bool agree() const { return enumeration == formula && tutte == formula; }
};

Counts ComputeCounts(const Instance& instance, const Weights& w, size_t limit) {
  Counts c;
  ConicPolytope p = Region(instance, w, limit);
  c.enumeration = Integer(LatticePoints(p, Closure::kOpen).size()) *
                  w.system.group.TorsionOrder();
  SubsetTable table = BuildSubsetTable(instance.config.matrix(), limit);
  c.formula = ConicCountFormula(table);
  c.tutte = MultiplicityTutte(table, 1, 0);
  return c;
}

Json CountCommand(const Instance& instance, const CommandOptions& options) {
  Json r = ReportHead("count", instance);
  Counts c = ComputeCounts(instance, ComputeWeights(instance), options.limit);
  r["enumeration"] = IntegerJson(c.enumeration);
  r["formula"] = IntegerJson(c.formula);
  r["tutte"] = RationalText(c.tutte);
  r["agree"] = c.agree();
  r["ok"] = c.agree();
  return r;
}

Json StatusJson(const GorensteinStatus& s) {
  Json j;
  j["verdict"] = VerdictName(s.verdict);
  j["description"] = s.Describe();
  if (s.unbalanced_circuit) {
    Json w;
    w["kind"] = "circuit";
    w["edges"] = EdgeList(s.unbalanced_circuit->edges);
    w["walk"] = s.unbalanced_circuit->walk.ToString();
    j["witness"] = w;
  } else if (!s.odd_negative_circle.empty()) {
    Json w;
    w["kind"] = "odd_negative_circle";
    w["edges"] = EdgeList(s.odd_negative_circle);
    j["witness"] = w;
  } else if (s.canonical_class) {
    Json w;
    w["kind"] = "canonical_class";
    w["class"] = s.canonical_class->ToString();
    j["witness"] = w;
  }
  return j;
}

Json GorensteinCommand(const Instance& instance, const CommandOptions& options) {
  Json r = ReportHead("gorenstein", instance);
  Weights w = ComputeWeights(instance);
  GorensteinStatus by_class = GorensteinByCanonicalClass(w.system);
  r["canonical_class"] = CanonicalClass(w.system).ToString();
  r["by_canonical_class"] = StatusJson(by_class);
  bool ok = true;
  if (instance.graph) {
    GorensteinStatus by_walks = GorensteinByWalks(*instance.graph, options.limit);
    r["verdict"] = VerdictName(by_walks.verdict);
    r["description"] = by_walks.Describe();
    r["by_walks"] = StatusJson(by_walks);
    ok = by_walks.verdict == by_class.verdict;
  } else {
    r["verdict"] = VerdictName(by_class.verdict);
    r["description"] = by_class.Describe();
  }
  r["agree"] = ok;
  r["ok"] = ok;
  return r;
}

std::string ArcText(const Arc& a) {
  return std::to_string(a.first + 1) + "->" + std::to_string(a.second + 1);
}

Json OrientationsCommand(const Instance& instance, const CommandOptions& options) {
  Json r = ReportHead("orientations", instance);
  TypeAReduction red = ToTypeA(RequireGraph(instance, "orientations"));
  const BidirectedGraph& g = red.reduced;
  if (!g.IsConnected()) throw ValidationError("the reduced graph is not connected");
  if (options.source < 1 || options.source > g.vertex_count()) {
    throw ValidationError("source vertex must lie in 1.." +
                          std::to_string(g.vertex_count()));
  }
  // A forest of a disconnected input may close a cycle through the added
  // vertex, so it is only reused for connected inputs.
  SignedWeights sw = ComputeSignedWeights(
      g, instance.graph->IsConnected() ? instance.doc.forest : std::nullopt);
  ConicPolytope region = CyclePolytope(g, sw.forest, options.limit);
  BijectionReport report =
      VerifyBijection(g, options.source - 1, sw.weights, region, options.limit);
  r["source"] = options.source;
  r["switched_vertices"] = VertexList(red.switched_vertices);
  r["added_vertex"] = red.added_vertex ? Json(*red.added_vertex + 1) : Json(nullptr);
  r["tree"] = EdgeList(sw.forest);
  Json list = Json::array();
  const Orientation reference = ReferenceOrientation(g);
  for (size_t k = 0; k < report.orientations.size(); ++k) {
    Json item;
    Json arcs = Json::array();
    for (const Arc& a : report.orientations[k]) arcs.push_back(ArcText(a));
    item["arcs"] = arcs;
    item["agreement"] = EdgeList(AgreementSet(reference, report.orientations[k]));
    item["class"] = VectorJson(report.classes[k]);
    list.push_back(item);
  }
  r["orientations"] = list;
  r["lattice_points"] = report.points.size();
  r["tutte"] = IntegerJson(report.tutte);
  r["bijection"] = report.ok();
  r["problems"] = report.problems;
  r["ok"] = report.ok();
  return r;
}

Json EhrhartCommand(const Instance& instance, const CommandOptions& options) {
  Json r = ReportHead("ehrhart", instance);
  Weights w = ComputeWeights(instance);
  ConicPolytope p = Region(instance, w, options.limit);
  std::vector<Rational> coefficients =
      EhrhartGaleZonotope(BuildSubsetTable(instance.config.matrix(), options.limit));
  r["polynomial"] = PolynomialToString(coefficients);
  Json coeffs = Json::array();
  for (const Rational& c : coefficients) coeffs.push_back(RationalText(c));
  r["coefficients"] = coeffs;
  bool ok = true;
  Json checks = Json::array();
  for (int t = 1; t <= 3; ++t) {
    Rational formula = EvaluatePolynomial(coefficients, t);
    size_t direct = LatticePoints(p, Closure::kClosed, t).size();
    Json c;
    c["t"] = t;
    c["formula"] = RationalText(formula);
    c["direct"] = direct;
    c["ok"] = formula == Rational(Integer(direct));
    ok = ok && c["ok"].get<bool>();
    checks.push_back(c);
  }
  r["checks"] = checks;
  Rational at_minus_one = EvaluatePolynomial(coefficients, -1);
  if (p.ambient_dim % 2 == 1) at_minus_one = -at_minus_one;
  size_t open = LatticePoints(p, Closure::kOpen).size();
  Json rec;
  rec["signed_value_at_minus_one"] = RationalText(at_minus_one);
  rec["open_points"] = open;
  rec["ok"] = at_minus_one == Rational(Integer(open));
  ok = ok && rec["ok"].get<bool>();
  r["reciprocity"] = rec;
  r["ok"] = ok;
  return r;
}

Json ReduceCommand(const Instance& instance) {
  Json r = ReportHead("reduce", instance);
  TypeAReduction red = ToTypeA(RequireGraph(instance, "reduce"));
  r["balanced"] = true;
  r["switched_vertices"] = VertexList(red.switched_vertices);
  r["added_vertex"] = red.added_vertex ? Json(*red.added_vertex + 1) : Json(nullptr);
  Json roots = Json::array();
  for (const IntVector& v : red.reduced_roots) roots.push_back(RootToString(v));
  r["reduced_roots"] = roots;
  Json orientation = Json::array();
  for (const Arc& a : red.orientation) orientation.push_back(ArcText(a));
  r["orientation"] = orientation;
  r["ok"] = true;
  return r;
}

std::string RenderGorenstein(const Json& r) {
  std::ostringstream out;
  out << r["description"].get<std::string>() << "\n";
  out << "canonical class: " << r["canonical_class"].get<std::string>() << "\n";
  if (r.contains("by_walks")) {
    out << "canonical class route: "
        << r["by_canonical_class"]["verdict"].get<std::string>()
        << (r["agree"].get<bool>() ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  return out.str();
}

}  // namespace

Json IntegerJson(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json VectorJson(const IntVector& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(IntegerJson(x));
  return out;
}

std::string JsonIntegerText(const Json& x) {
  return x.is_string() ? x.get<std::string>() : x.dump();
}

std::string JsonVectorText(const Json& v) { return "(" + Join(v, ",") + ")"; }

const std::vector<std::string>& CommandNames() {
  static const std::vector<std::string> names = {
      "classgroup", "weights", "conic",  "count", "gorenstein",
      "orientations", "ehrhart", "reduce", "verify"};
  return names;
}

Json RunCommand(const std::string& command, const Instance& instance,
                const CommandOptions& options) {
  if (command == "classgroup") return ClassGroupCommand(instance);
  if (command == "weights") return WeightsCommand(instance);
  if (command == "conic") return ConicCommand(instance, options);
  if (command == "count") return CountCommand(instance, options);
  if (command == "gorenstein") return GorensteinCommand(instance, options);
  if (command == "orientations") return OrientationsCommand(instance, options);
  if (command == "ehrhart") return EhrhartCommand(instance, options);
  if (command == "reduce") return ReduceCommand(instance);
  if (command == "verify") return RunVerify(instance, options);
  throw ValidationError("unknown command '" + command + "'");
}

int ReportExitCode(const Json& report) {
  return report.value("ok", false) ? kExitOk : kExitInvariant;
}

std::string RenderText(const Json& r) {
  std::ostringstream out;
  const std::string command = r["command"].get<std::string>();
  if (command == "classgroup") {
    out << r["group"].get<std::string>() << "\n";
    std::string diag;
    for (const Json& s : r["snf_diagonal"]) diag += " " + JsonIntegerText(s);
    out << "snf diagonal:" << diag << "\n";
    if (r.contains("case_formula")) {
      out << "case formula: " << r["case_formula"].get<std::string>()
          << (r["ok"].get<bool>() ? " (agrees)" : " (DISAGREES)") << "\n";
      for (const Json& c : r["components"]) {
        out << "component {" << Join(c["vertices"], ",") << "}: case "
            << c["case"].dump() << "\n";
      }
    }
  } else if (command == "weights") {
    out << "Cl = " << r["group"].get<std::string>() << "\n";
    if (r.contains("forest")) {
      out << "forest: {" << Join(r["forest"], ",") << "}\n";
      for (size_t i = 0; i < r["walks"].size(); ++i) {
        const Json& w = r["walks"][i];
        out << "walk " << i + 1 << " (epsilon " << w["epsilon"].get<std::string>()
            << "): " << w["walk"].get<std::string>() << "\n";
      }
    }
    for (const Json& e : r["weights"]) {
      out << e["edge"].get<std::string>() << " " << e["generator"].get<std::string>()
          << " " << JsonVectorText(e["free"]);
      if (!e["torsion"].empty()) out << " + " << JsonVectorText(e["torsion"]);
      out << "\n";
    }
    if (!r["exact"].get<bool>()) out << "NOT EXACT: " << r["problem"].get<std::string>() << "\n";
  } else if (command == "conic") {
    out << "region in Z^" << r["ambient_dim"].dump() << ":\n";
    for (const Json& f : r["inequalities"]) out << "  " << f.get<std::string>() << "\n";
    if (r.contains("points")) {
      out << "points (" << r["points"].size() << "):";
      for (const Json& p : r["points"]) out << " " << JsonVectorText(p);
      out << "\n";
    }
    if (r.contains("count")) {
      out << "count: " << JsonIntegerText(r["count"]) << "\n";
    }
  } else if (command == "count") {
    out << "enumeration=" << JsonIntegerText(r["enumeration"])
        << " formula=" << JsonIntegerText(r["formula"])
        << " tutte=" << r["tutte"].get<std::string>() << " "
        << (r["agree"].get<bool>() ? "OK" : "MISMATCH") << "\n";
  } else if (command == "gorenstein") {
    out << RenderGorenstein(r);
  } else if (command == "orientations") {
    out << "acyclic orientations with unique source " << r["source"].dump() << ": "
        << r["orientations"].size() << "\n";
    size_t k = 0;
    for (const Json& o : r["orientations"]) {
      out << ++k << ": " << Join(o["arcs"], " ") << " | agree {"
          << Join(o["agreement"], ",") << "} | class " << JsonVectorText(o["class"])
          << "\n";
    }
    out << "lattice points: " << r["lattice_points"].dump() << "\n";
    out << "T(1,0) = " << JsonIntegerText(r["tutte"]) << "\n";
    out << "bijection: " << (r["bijection"].get<bool>() ? "OK" : "FAILED") << "\n";
    for (const Json& p : r["problems"]) out << "  " << p.get<std::string>() << "\n";
  } else if (command == "ehrhart") {
    out << "L(t) = " << r["polynomial"].get<std::string>() << "\n";
    for (const Json& c : r["checks"]) {
      out << "t=" << c["t"].dump() << ": formula=" << c["formula"].get<std::string>()
          << " direct=" << c["direct"].dump() << " "
          << (c["ok"].get<bool>() ? "OK" : "MISMATCH") << "\n";
    }
    const Json& rec = r["reciprocity"];
    out << "reciprocity: " << rec["signed_value_at_minus_one"].get<std::string>()
        << " open=" << rec["open_points"].dump() << " "
        << (rec["ok"].get<bool>() ? "OK" : "MISMATCH") << "\n";
  } else if (command == "reduce") {
    out << "balanced: switching set {" << Join(r["switched_vertices"], ",") << "}\n";
    out << "added vertex: "
        << (r["added_vertex"].is_null() ? std::string("none") : r["added_vertex"].dump())
        << "\n";
    out << "reduced roots: " << Join(r["reduced_roots"], ", ") << "\n";
    out << "orientation: " << Join(r["orientation"], " ") << "\n";
  } else if (command == "verify") {
    size_t failed = 0;
    for (const Json& c : r["checks"]) {
      bool ok = c["ok"].get<bool>();
      failed += !ok;
      out << (ok ? "PASS " : "FAIL ") << c["name"].get<std::string>();
      if (!c["detail"].get<std::string>().empty()) {
        out << ": " << c["detail"].get<std::string>();
      }
      out << "\n";
    }
    if (failed == 0) {
      out << "all " << r["checks"].size() << " checks passed\n";
    } else {
      out << failed << " of " << r["checks"].size() << " checks failed\n";
    }
  }
  for (const Json& note : r["input"]["notes"]) {
    out << "note: " << note.get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace signed_toric::cli
