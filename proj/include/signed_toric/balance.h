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

#ifndef SIGNED_TORIC_BALANCE_H_
#define SIGNED_TORIC_BALANCE_H_

#include <cstddef>
#include <vector>

#include "signed_toric/bidirected_graph.h"

namespace signed_toric {

struct BalanceResult {
  bool balanced = false;
  // Sorted vertices whose switching makes every ordinary edge positive. In
  // each component the smaller of the two possible sets is used, ties going
  // to the lexicographically smaller one.
  std::vector<int> switching;
  // When unbalanced: the edges of a negative circle.
  std::vector<size_t> negative_circle;
};

// Halfedges are ignored: balance concerns circles only.
BalanceResult CheckBalance(const BidirectedGraph& g);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_BALANCE_H_
