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

#include "signed_toric/gorenstein.h"

namespace signed_toric {

std::string VerdictName(GorensteinVerdict v) {
  switch (v) {
    case GorensteinVerdict::kGorenstein:
      return "Gorenstein";
    case GorensteinVerdict::kQGorensteinOnly:
      return "QGorensteinOnly";
    case GorensteinVerdict::kNeither:
      return "Neither";
  }
  return "";
}

std::string GorensteinStatus::Describe() const {
  std::string witness;
  if (unbalanced_circuit) {
    int plus = 0, minus = 0;
    for (int r : unbalanced_circuit->rho) (r > 0 ? plus : minus)++;
    witness = "circuit {" + EdgeSetToString(unbalanced_circuit->edges) +
              "} has #W+=" + std::to_string(plus) +
              " #W-=" + std::to_string(minus);
  } else if (!odd_negative_circle.empty()) {
    witness = "odd negative circle {" + EdgeSetToString(odd_negative_circle) + "}";
  } else if (canonical_class) {
    witness = "canonical class " + canonical_class->ToString();
  }
  switch (verdict) {
    case GorensteinVerdict::kGorenstein:
      return "Gorenstein";
    case GorensteinVerdict::kQGorensteinOnly:
      return "Q-Gorenstein (not Gorenstein): " + witness;
    case GorensteinVerdict::kNeither:
      return "not Q-Gorenstein: " + witness;
  }
  return "";
}

GorensteinStatus GorensteinByWalks(const BidirectedGraph& g, size_t limit) {
  GorensteinStatus status;
  for (SignedCircuit& c : CircuitsStructural(g, limit)) {
    int sum = 0;
    for (int r : c.rho) sum += r;
    if (sum != 0) {
      status.verdict = GorensteinVerdict::kNeither;
      status.unbalanced_circuit = std::move(c);
      return status;
    }
  }
  for (const std::vector<size_t>& circle : AllCircles(g, limit)) {
    if (circle.size() % 2 == 1 && CircleSign(g, circle) < 0) {
      status.verdict = GorensteinVerdict::kQGorensteinOnly;
      status.odd_negative_circle = circle;
      return status;
    }
  }
  return status;
}

GorensteinStatus GorensteinByCanonicalClass(const WeightSystem& w) {
  GorensteinStatus status;
  ClassElement k = CanonicalClass(w);
  if (!IsZeroVector(k.free)) {
    status.verdict = GorensteinVerdict::kNeither;
  } else if (!IsZeroVector(k.torsion)) {
    status.verdict = GorensteinVerdict::kQGorensteinOnly;
  }
  if (status.verdict != GorensteinVerdict::kGorenstein) status.canonical_class = k;
  return status;
}

}  // namespace signed_toric
