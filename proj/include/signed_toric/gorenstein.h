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

// Gorenstein and Q-Gorenstein tests for the toric ring of a signed poset.

#ifndef SIGNED_TORIC_GORENSTEIN_H_
#define SIGNED_TORIC_GORENSTEIN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "signed_toric/bidirected_graph.h"
#include "signed_toric/class_group.h"
#include "signed_toric/signed_circuits.h"

namespace signed_toric {

enum class GorensteinVerdict { kGorenstein, kQGorensteinOnly, kNeither };

std::string VerdictName(GorensteinVerdict v);  // "Gorenstein", ...

struct GorensteinStatus {
  GorensteinVerdict verdict = GorensteinVerdict::kGorenstein;
  // Walk route witnesses.
  std::optional<SignedCircuit> unbalanced_circuit;  // #W^+ != #W^-
  std::vector<size_t> odd_negative_circle;
  // Canonical class route witness: the sum of all weights.
  std::optional<ClassElement> canonical_class;

  bool has_witness() const {
    return unbalanced_circuit.has_value() || !odd_negative_circle.empty() ||
           canonical_class.has_value();
  }
  // "Q-Gorenstein (not Gorenstein): odd negative circle {e1,e2,e3}".
  std::string Describe() const;
};

// Q-Gorenstein iff every canonical walk W has #W^+ = #W^- (occurrences
// counted with multiplicity); Gorenstein iff moreover no negative circle has
// odd length.
GorensteinStatus GorensteinByWalks(const BidirectedGraph& g,
                                   size_t limit = kDefaultEnumerationLimit);

// Q-Gorenstein iff the free part of the canonical class vanishes; Gorenstein
// iff the whole class vanishes.
GorensteinStatus GorensteinByCanonicalClass(const WeightSystem& w);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_GORENSTEIN_H_
