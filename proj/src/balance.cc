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

#include "signed_toric/balance.h"

#include <algorithm>
#include <queue>

namespace signed_toric {

BalanceResult CheckBalance(const BidirectedGraph& g) {
  const int d = g.vertex_count();
  std::vector<std::vector<size_t>> incident = g.IncidenceLists();
  std::vector<int> psi(d, 0);
  std::vector<long> parent_edge(d, -1);
  BalanceResult result;
  result.balanced = true;

  for (int root = 0; root < d; ++root) {
    if (psi[root] != 0) continue;
    std::vector<int> component{root};
    psi[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (size_t e : incident[x]) {
        const BiEdge& edge = g.edge(e);
        if (edge.is_halfedge()) continue;
        int y = edge.Other(x);
        if (psi[y] == 0) {
          psi[y] = psi[x] * edge.Sign();
          parent_edge[y] = static_cast<long>(e);
          component.push_back(y);
          queue.push(y);
        } else if (psi[x] * psi[y] * edge.Sign() < 0 && result.balanced) {
          // Tree paths from x and y to their common ancestor plus e.
          auto ancestors = [&](int v) {
            std::vector<int> chain{v};
            while (parent_edge[v] >= 0) {
              v = g.edge(parent_edge[v]).Other(v);
              chain.push_back(v);
            }
            return chain;
          };
          std::vector<int> ax = ancestors(x), ay = ancestors(y);
          while (ax.size() > 1 && ay.size() > 1 &&
                 ax[ax.size() - 2] == ay[ay.size() - 2]) {
            ax.pop_back();
            ay.pop_back();
          }
          std::vector<size_t> circle{e};
          for (size_t i = 0; i + 1 < ax.size(); ++i) {
            circle.push_back(parent_edge[ax[i]]);
          }
          for (size_t i = 0; i + 1 < ay.size(); ++i) {
            circle.push_back(parent_edge[ay[i]]);
          }
          std::sort(circle.begin(), circle.end());
          result.balanced = false;
          result.negative_circle = circle;
        }
      }
    }
    std::vector<int> minus, plus;
    for (int v : component) (psi[v] < 0 ? minus : plus).push_back(v);
    std::sort(minus.begin(), minus.end());
    std::sort(plus.begin(), plus.end());
    const std::vector<int>* pick = &minus;
    if (plus.size() < minus.size() ||
        (plus.size() == minus.size() && plus < minus)) {
      pick = &plus;
    }
    result.switching.insert(result.switching.end(), pick->begin(), pick->end());
  }
  if (!result.balanced) {
    result.switching.clear();
  } else {
    std::sort(result.switching.begin(), result.switching.end());
  }
  return result;
}

}  // namespace signed_toric
