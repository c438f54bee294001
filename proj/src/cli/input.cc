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

#include "signed_toric/cli/input.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "signed_toric/errors.h"
#include "signed_toric/signed_poset.h"
#include "signed_toric/type_a.h"

namespace signed_toric::cli {
namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> Tokenize(const std::string& line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size() && line[i] != '#') {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line)
      : tokens_(std::move(tokens)), line_(line) {}

  [[noreturn]] void Fail(const std::string& message, size_t token) const {
    int column = token < tokens_.size()
                     ? tokens_[token].column
                     : (tokens_.empty() ? 1
                                        : tokens_.back().column +
                                              static_cast<int>(tokens_.back().text.size()));
    throw ParseError(message, line_, column);
  }

  [[noreturn]] void Invalid(const std::string& message) const {
    throw ValidationError("line " + std::to_string(line_) + ": " + message);
  }

  size_t size() const { return tokens_.size(); }
  const std::string& text(size_t k) const { return tokens_[k].text; }

  void ExpectCount(size_t low, size_t high, const std::string& usage) const {
    if (tokens_.size() < low) Fail("missing argument; expected " + usage, tokens_.size());
    if (tokens_.size() > high) Fail("unexpected token; expected " + usage, high);
  }

  long Integer(size_t k, bool allow_sign = true) const {
    const std::string& s = tokens_[k].text;
    size_t pos = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) pos = 1;
    if (pos == s.size() || s.size() - pos > 9 ||
        !std::all_of(s.begin() + pos, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      Fail("expected an integer, found '" + s + "'", k);
    }
    long value = std::stol(s.substr(pos));
    return s[0] == '-' ? -value : value;
  }

  // "e3" -> 2 or "v3" -> 2.
  size_t Label(size_t k, char prefix, size_t count) const {
    const std::string& s = tokens_[k].text;
    if (s.size() < 2 || s[0] != prefix ||
        !std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        s.size() > 10) {
      Fail(std::string("expected ") + prefix + "<index>, found '" + s + "'", k);
    }
    long value = std::stol(s.substr(1));
    if (value < 1 || static_cast<size_t>(value) > count) {
      Fail(std::string(1, prefix) + std::to_string(value) + " is out of range 1.." +
               std::to_string(count),
           k);
    }
    return value - 1;
  }

 private:
  std::vector<Token> tokens_;
  int line_;
};

}  // namespace

std::string InputKindName(InputKind kind) {
  switch (kind) {
    case InputKind::kSignedPoset:
      return "signed_poset";
    case InputKind::kGraph:
      return "graph";
    case InputKind::kPoset:
      return "poset";
    case InputKind::kVectors:
      return "vectors";
  }
  return "";
}

InputDocument ParseInput(const std::string& text) {
  InputDocument doc;
  bool have_kind = false, have_dim = false;
  std::map<long, Walk> walks;
  // Forest and walk lines are range-checked once the edge count is known.
  std::vector<std::pair<int, std::vector<Token>>> deferred;
  std::istringstream in(text);
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::vector<Token> tokens = Tokenize(raw);
    if (tokens.empty()) continue;
    LineParser line(tokens, line_number);
    const std::string& keyword = line.text(0);
    if (keyword == "kind") {
      line.ExpectCount(2, 2, "'kind <signed_poset|graph|poset|vectors>'");
      if (have_kind) line.Fail("kind given twice", 0);
      const std::string& k = line.text(1);
      if (k == "signed_poset") {
        doc.kind = InputKind::kSignedPoset;
      } else if (k == "graph") {
        doc.kind = InputKind::kGraph;
      } else if (k == "poset") {
        doc.kind = InputKind::kPoset;
      } else if (k == "vectors") {
        doc.kind = InputKind::kVectors;
      } else {
        line.Fail("unknown kind '" + k + "'", 1);
      }
      have_kind = true;
      continue;
    }
    if (!have_kind) line.Fail("the first statement must be 'kind'", 0);
    if (keyword == "dim") {
      line.ExpectCount(2, 2, "'dim <d>'");
      if (have_dim) line.Fail("dim given twice", 0);
      long d = line.Integer(1, false);
      if (d < 0 || d > 64) line.Fail("dim must lie in 0..64", 1);
      doc.dim = d;
      have_dim = true;
      continue;
    }
    if (keyword == "forest" || keyword == "walk") {
      deferred.push_back({line_number, tokens});
      continue;
    }
    if (!have_dim) line.Fail("'dim' must precede '" + keyword + "'", 0);
    const long d = static_cast<long>(doc.dim);
    auto vertex = [&](size_t k, bool allow_sign) {
      long x = line.Integer(k, allow_sign);
      long a = x < 0 ? -x : x;
      if (a < 1 || a > d) {
        line.Fail("index " + std::to_string(a) + " is out of range 1.." + std::to_string(d), k);
      }
      return x;
    };
    if (keyword == "root") {
      if (doc.kind != InputKind::kSignedPoset) line.Fail("'root' needs kind signed_poset", 0);
      line.ExpectCount(2, 3, "'root <+-i> [<+-j>]'");
      long i = vertex(1, true);
      IntVector v(doc.dim);
      v[std::labs(i) - 1] = i > 0 ? 1 : -1;
      if (line.size() == 3) {
        long j = vertex(2, true);
        if (std::labs(i) == std::labs(j)) {
          line.Invalid("loop at vertex " + std::to_string(std::labs(i)));
        }
        v[std::labs(j) - 1] = j > 0 ? 1 : -1;
      }
      doc.roots.push_back(v);
    } else if (keyword == "edge") {
      if (doc.kind != InputKind::kGraph) line.Fail("'edge' needs kind graph", 0);
      line.ExpectCount(3, 3, "'edge <u> <v>'");
      long u = vertex(1, false), v = vertex(2, false);
      if (u == v) line.Invalid("loop at vertex " + std::to_string(u));
      doc.edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    } else if (keyword == "cover") {
      if (doc.kind != InputKind::kPoset) line.Fail("'cover' needs kind poset", 0);
      line.ExpectCount(3, 3, "'cover <i> <j>'");
      long i = vertex(1, false), j = vertex(2, false);
      if (i == j) line.Invalid("cover of p" + std::to_string(i) + " by itself");
      doc.covers.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1)});
    } else if (keyword == "vector") {
      if (doc.kind != InputKind::kVectors) line.Fail("'vector' needs kind vectors", 0);
      line.ExpectCount(doc.dim + 1, doc.dim + 1,
                       "'vector' with " + std::to_string(doc.dim) + " entries");
      IntVector v(doc.dim);
      for (size_t k = 0; k < doc.dim; ++k) v[k] = line.Integer(k + 1);
      doc.vectors.push_back(v);
    } else {
      line.Fail("unknown statement '" + keyword + "'", 0);
    }
  }
  if (!have_kind) throw ParseError("missing 'kind'", line_number + 1, 1);
  if (!have_dim) throw ParseError("missing 'dim'", line_number + 1, 1);

  size_t edge_count = 0;
  switch (doc.kind) {
    case InputKind::kSignedPoset:
      edge_count = doc.roots.size();
      break;
    case InputKind::kGraph:
      edge_count = doc.edges.size();
      break;
    case InputKind::kVectors:
      edge_count = doc.vectors.size();
      break;
    case InputKind::kPoset:
      // Edge labels of a poset refer to the covers of the bounded poset,
      // which are only known after building; accept any index here.
      edge_count = 1UL << 20;
      break;
  }
  for (auto& [number, tokens] : deferred) {
    LineParser line(tokens, number);
    if (line.text(0) == "forest") {
      if (doc.forest) line.Fail("forest given twice", 0);
      std::vector<size_t> forest;
      for (size_t k = 1; k < line.size(); ++k) {
        forest.push_back(line.Label(k, 'e', edge_count));
      }
      std::sort(forest.begin(), forest.end());
      if (std::adjacent_find(forest.begin(), forest.end()) != forest.end()) {
        line.Invalid("forest repeats an edge");
      }
      doc.forest = forest;
      continue;
    }
    // walk <k>: e.. v.. e..
    if (line.size() < 2) line.Fail("expected 'walk <k>: e<i> v<j> ...'", 1);
    std::string index = line.text(1);
    size_t first = 2;
    if (!index.empty() && index.back() == ':') {
      index.pop_back();
    } else if (line.size() > 2 && line.text(2) == ":") {
      first = 3;
    } else {
      line.Fail("expected ':' after the circuit index", 2);
    }
    if (index.empty() || index.size() > 6 ||
        !std::all_of(index.begin(), index.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      line.Fail("expected a circuit index", 1);
    }
    long k = std::stol(index);
    if (k < 1) line.Fail("circuit indices start at 1", 1);
    if (walks.count(k)) line.Fail("walk " + std::to_string(k) + " given twice", 1);
    if (line.size() <= first) line.Fail("empty walk", first);
    Walk w;
    for (size_t t = first; t < line.size(); ++t) {
      if ((t - first) % 2 == 0) {
        w.edges.push_back(line.Label(t, 'e', edge_count));
      } else {
        w.vertices.push_back(static_cast<int>(line.Label(t, 'v', doc.dim + 1)));
      }
    }
    if ((line.size() - first) % 2 == 0) line.Fail("a walk must end with an edge", line.size() - 1);
    walks.emplace(k, std::move(w));
  }
  long expected = 1;
  for (auto& [k, w] : walks) {
    if (k != expected) {
      throw ValidationError("walk " + std::to_string(expected) + " is missing");
    }
    ++expected;
    doc.walks.push_back(std::move(w));
  }
  return doc;
}

InputDocument ParseInputFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseInput(text.str());
}

Instance BuildInstance(const InputDocument& doc, const BuildOptions& options) {
  std::vector<std::string> notes;
  if (doc.kind == InputKind::kVectors) {
    if (doc.forest || !doc.walks.empty()) {
      throw ValidationError("forest and walk lines need a signed poset input");
    }
    return Instance{doc, VectorConfig(doc.dim, doc.vectors), std::nullopt, notes};
  }
  std::vector<IntVector> generators;
  switch (doc.kind) {
    case InputKind::kSignedPoset: {
      SignedPoset given(doc.dim, doc.roots);
      SignedPoset poset = given;
      if (options.strict_poset) {
        PosetDiagnostics diag = ValidatePoset(given);
        if (!diag.valid) throw ValidationError("not a signed poset: " + diag.problems[0]);
      } else {
        poset = CloseUp(given);
        PosetDiagnostics diag = ValidatePoset(poset);
        if (!diag.valid) throw ValidationError("not a signed poset: " + diag.problems[0]);
        if (poset.roots().size() > given.roots().size()) {
          notes.push_back("closed up with " +
                          std::to_string(poset.roots().size() - given.roots().size()) +
                          " generated roots");
        }
      }
      VectorConfig tilde = ExtremalGenerators(poset);
      for (const IntVector& r : given.roots()) {
        if (std::find(tilde.vectors().begin(), tilde.vectors().end(), r) ==
            tilde.vectors().end()) {
          notes.push_back("root " + RootToString(r) + " is not extremal and is dropped");
        }
      }
      if (tilde.size() != given.roots().size() &&
          (doc.forest || !doc.walks.empty())) {
        throw ValidationError(
            "forest and walk lines need every root to be an extremal generator");
      }
      generators = tilde.vectors();
      break;
    }
    case InputKind::kGraph: {
      SimpleGraph g{static_cast<int>(doc.dim), doc.edges};
      generators = GraphPoset(g).roots();
      break;
    }
    case InputKind::kPoset:
      generators = Hibi(static_cast<int>(doc.dim), doc.covers).roots();
      break;
    case InputKind::kVectors:
      break;
  }
  const size_t d = doc.kind == InputKind::kPoset ? doc.dim + 1 : doc.dim;
  VectorConfig config(d, generators);
  BidirectedGraph graph = HasseDiagram(config);
  auto check_edge = [&](size_t e) {
    if (e >= graph.edge_count()) {
      throw ValidationError("e" + std::to_string(e + 1) + " is out of range 1.." +
                            std::to_string(graph.edge_count()));
    }
  };
  if (doc.forest) {
    for (size_t e : *doc.forest) check_edge(e);
  }
  for (const Walk& w : doc.walks) {
    for (size_t e : w.edges) check_edge(e);
    for (int v : w.vertices) {
      if (v >= graph.vertex_count()) {
        throw ValidationError("v" + std::to_string(v + 1) + " is out of range");
      }
    }
  }
  return Instance{doc, config, graph, notes};
}

}  // namespace signed_toric::cli
