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

#include "signed_toric/matroid.h"

#include <algorithm>
#include <functional>
#include <string>

#include "signed_toric/errors.h"
#include "signed_toric/normal_form.h"

namespace signed_toric {

size_t ColumnRank(const IntMatrix& a, const std::vector<size_t>& columns) {
  if (columns.empty()) return 0;
  return Rank(a.SelectColumns(columns));
}

size_t MatroidRank(const VectorConfig& v, const std::vector<size_t>& subset) {
  return ColumnRank(v.matrix(), subset);
}

std::vector<MatroidCircuit> ColumnCircuits(const IntMatrix& a, size_t limit) {
  const size_t n = a.cols();
  if (n > limit) {
    throw LimitExceeded("circuit enumeration over " + std::to_string(n) +
                        " elements exceeds limit " + std::to_string(limit));
  }
  std::vector<MatroidCircuit> out;
  std::vector<size_t> current;
  // Every circuit minus its largest element is independent, as are all of
  // its prefixes, so extending independent sets reaches every circuit.
  std::function<void(size_t)> extend = [&](size_t next) {
    for (size_t j = next; j < n; ++j) {
      current.push_back(j);
      if (ColumnRank(a, current) == current.size()) {
        extend(j + 1);
      } else {
        IntMatrix k = KernelBasis(a.SelectColumns(current));
        IntVector x = k.Column(0);
        if (std::none_of(x.begin(), x.end(),
                         [](const Integer& e) { return e == 0; })) {
          if (x[0] < 0) {
            for (Integer& e : x) e = -e;
          }
          MatroidCircuit c{current, IntVector(n)};
          for (size_t i = 0; i < current.size(); ++i) c.vector[current[i]] = x[i];
          out.push_back(std::move(c));
        }
      }
      current.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(),
            [](const MatroidCircuit& x, const MatroidCircuit& y) {
              return x.support < y.support;
            });
  return out;
}

std::vector<MatroidCircuit> Circuits(const VectorConfig& v, size_t limit) {
  return ColumnCircuits(v.matrix(), limit);
}

bool IsStronglyConvex(const VectorConfig& v, size_t limit) {
  for (const MatroidCircuit& c : Circuits(v, limit)) {
    bool positive = true, negative = true;
    for (size_t i : c.support) {
      if (c.vector[i] < 0) positive = false;
      if (c.vector[i] > 0) negative = false;
    }
    if (positive || negative) return false;
  }
  return true;
}

IntMatrix GaleMatrix(const IntMatrix& a, const IntMatrix* kernel_choice) {
  if (kernel_choice == nullptr) return KernelBasis(a).Transpose();
  if (!IsKernelBasis(a, *kernel_choice)) {
    throw ValidationError("supplied kernel basis is not a saturated basis of "
                          "the kernel");
  }
  return kernel_choice->Transpose();
}

std::vector<IntVector> GaleVectors(const VectorConfig& v,
                                   const IntMatrix* kernel_choice) {
  IntMatrix g = GaleMatrix(v.matrix(), kernel_choice);
  std::vector<IntVector> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(g.Column(i));
  return out;
}

}  // namespace signed_toric
