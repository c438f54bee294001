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

// Class group and weights of a signed poset read off its Hasse diagram from a
// maximal pseudo-forest and the walks of its fundamental circuits.

#ifndef SIGNED_TORIC_SIGNED_WEIGHTS_H_
#define SIGNED_TORIC_SIGNED_WEIGHTS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "signed_toric/bidirected_graph.h"
#include "signed_toric/class_group.h"
#include "signed_toric/conic.h"
#include "signed_toric/signed_circuits.h"
#include "signed_toric/signed_poset.h"
#include "signed_toric/walk.h"

namespace signed_toric {

struct ComponentInfo {
  CaseType case_type;
  std::vector<int> vertices;
  std::vector<size_t> edges;
  std::vector<size_t> forest;
  std::vector<size_t> negative_circle;  // Case 3 only
};

struct SignedWeights {
  std::vector<ComponentInfo> components;
  std::vector<size_t> forest;    // sorted, all components
  std::vector<size_t> epsilons;  // free coordinate i belongs to epsilons[i]
  std::vector<SignedCircuit> fundamental;  // one per epsilon
  // Free part b_e; one torsion row (mod 2) per Case-3 component marking the
  // edges of its negative circle.
  WeightSystem weights;
};

// Free rank #E - d + 1 (Case 1) or #E - d (Cases 2, 3) per component, plus
// Z/2 per Case-3 component.
ClassGroup ClassGroupSigned(const BidirectedGraph& g);

// `forest` defaults to MaximalPseudoForest per component. Without `walks`,
// epsilons are the non-forest edges in increasing order with the walks of
// FundamentalCircuit. With `walks`, each walk fixes one fundamental circuit
// and its epsilon; together they must cover every non-forest edge once.
SignedWeights ComputeSignedWeights(
    const BidirectedGraph& g,
    const std::optional<std::vector<size_t>>& forest = std::nullopt,
    const std::vector<Walk>& walks = {});

// One facet pair per circuit read off its canonical walk W:
// -#W^- < sum_i (signed occurrences of epsilon_i in W) rho_i(epsilon_i) z_i
// < #W^+.
ConicPolytope ConicPolytopeSigned(const BidirectedGraph& g,
                                  const SignedWeights& w,
                                  size_t limit = kDefaultEnumerationLimit);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_SIGNED_WEIGHTS_H_
