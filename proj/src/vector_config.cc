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

#include "signed_toric/vector_config.h"

#include <string>
#include <utility>

#include "signed_toric/errors.h"
#include "signed_toric/feasibility.h"

namespace signed_toric {

VectorConfig::VectorConfig(size_t dim, std::vector<IntVector> vectors) {
  Init(dim, std::move(vectors));
  if (!IsStronglyConvexByFeasibility(*this)) {
    throw ValidationError("cone generated by the vectors is not strongly convex");
  }
  size_t redundant = FindRedundantVector(*this);
  if (redundant != size()) {
    throw ValidationError("vector " + std::to_string(redundant + 1) +
                          " is a nonnegative combination of the others");
  }
}

VectorConfig VectorConfig::PrimitiveOnly(size_t dim,
                                         std::vector<IntVector> vectors) {
  VectorConfig v;
  v.Init(dim, std::move(vectors));
  return v;
}

void VectorConfig::Init(size_t dim, std::vector<IntVector> vectors) {
  for (size_t i = 0; i < vectors.size(); ++i) {
    const std::string name = "vector " + std::to_string(i + 1);
    if (vectors[i].size() != dim) {
      throw ValidationError(name + " has length " +
                            std::to_string(vectors[i].size()) + ", expected " +
                            std::to_string(dim));
    }
    if (IsZeroVector(vectors[i])) throw ValidationError(name + " is zero");
    if (VectorGcd(vectors[i]) != 1) {
      throw ValidationError(name + " is not primitive");
    }
  }
  dim_ = dim;
  vectors_ = std::move(vectors);
  matrix_ = IntMatrix::FromColumns(vectors_, dim_);
}

bool IsStronglyConvexByFeasibility(const VectorConfig& v) {
  const size_t n = v.size();
  if (n == 0) return true;
  // A lambda = 0, lambda >= 0, sum lambda = 1.
  std::vector<LinearConstraint> constraints;
  for (size_t i = 0; i < v.dim(); ++i) {
    constraints.push_back({v.matrix().Row(i), Relation::kEq, 0});
  }
  for (size_t j = 0; j < n; ++j) {
    LinearConstraint c{IntVector(n), Relation::kGe, 0};
    c.coefficients[j] = 1;
    constraints.push_back(std::move(c));
  }
  constraints.push_back({IntVector(n, 1), Relation::kEq, 1});
  return !RationalFeasible(constraints, n).has_value();
}

size_t FindRedundantVector(const VectorConfig& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    std::vector<IntVector> others;
    for (size_t j = 0; j < v.size(); ++j) {
      if (j != i) others.push_back(v[j]);
    }
    if (ConeCoefficients(others, v[i]).has_value()) return i;
  }
  return v.size();
}

}  // namespace signed_toric
