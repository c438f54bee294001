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

// The line-oriented input format:
//
//   # comment
//   kind signed_poset | graph | poset | vectors
//   dim <d>
//   root <+-i> [<+-j>]        signed_poset: +-x_i or +-x_i +- x_j
//   edge <u> <v>              graph: simple graph on vertices 1..d
//   cover <i> <j>             poset: p_i < p_j on elements 1..d
//   vector <a_1> ... <a_d>    vectors: any integer vector
//   forest e<i> e<j> ...      optional pseudo-forest, 1-based edges
//   walk <k>: e<i> v<j> e<l> ...   optional walk for fundamental circuit k

#ifndef SIGNED_TORIC_CLI_INPUT_H_
#define SIGNED_TORIC_CLI_INPUT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signed_toric/bidirected_graph.h"
#include "signed_toric/int_matrix.h"
#include "signed_toric/vector_config.h"
#include "signed_toric/walk.h"

namespace signed_toric::cli {

enum class InputKind { kSignedPoset, kGraph, kPoset, kVectors };

std::string InputKindName(InputKind kind);

struct InputDocument {
  InputKind kind = InputKind::kSignedPoset;
  size_t dim = 0;
  std::vector<IntVector> roots;    // signed_poset
  std::vector<IntVector> vectors;  // vectors
  std::vector<std::pair<int, int>> edges;   // graph, 0-based
  std::vector<std::pair<int, int>> covers;  // poset, 0-based
  std::optional<std::vector<size_t>> forest;
  std::vector<Walk> walks;  // ordered by circuit index
};

// Throws ParseError for syntax errors and ValidationError (prefixed with the
// line) for well-formed lines naming an impossible object.
InputDocument ParseInput(const std::string& text);

// Reads and parses a file; an unreadable file is a ValidationError.
InputDocument ParseInputFile(const std::string& path);

struct BuildOptions {
  // Require the roots of a signed_poset to be a closed, antisymmetric set
  // instead of closing them up.
  bool strict_poset = false;
};

// The core object behind a document: the extremal generators as a vector
// configuration and, except for `kind vectors`, their Hasse diagram. Edges
// are the extremal generators in input order.
struct Instance {
  InputDocument doc;
  VectorConfig config;
  std::optional<BidirectedGraph> graph;
  std::vector<std::string> notes;
};

Instance BuildInstance(const InputDocument& doc, const BuildOptions& options = {});

}  // namespace signed_toric::cli

#endif  // SIGNED_TORIC_CLI_INPUT_H_
