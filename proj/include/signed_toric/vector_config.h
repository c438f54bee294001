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

#ifndef SIGNED_TORIC_VECTOR_CONFIG_H_
#define SIGNED_TORIC_VECTOR_CONFIG_H_

#include <cstddef>
#include <vector>

#include "signed_toric/int_matrix.h"

namespace signed_toric {

// Default cap on the number of vectors / edges for exponential enumerations.
inline constexpr size_t kDefaultEnumerationLimit = 20;

// An ordered list of primitive integer vectors v_1..v_n in Z^d generating a
// strongly convex cone minimally.
class VectorConfig {
 public:
  // Validates primitivity, strong convexity and minimality; throws
  // ValidationError otherwise.
  VectorConfig(size_t dim, std::vector<IntVector> vectors);

  // Checks only that each vector is nonzero, primitive and of length dim.
  // Used where the cone conditions are established by other means or are
  // the subject of the test.
  static VectorConfig PrimitiveOnly(size_t dim, std::vector<IntVector> vectors);

  size_t dim() const { return dim_; }
  size_t size() const { return vectors_.size(); }
  const IntVector& operator[](size_t i) const { return vectors_[i]; }
  const std::vector<IntVector>& vectors() const { return vectors_; }

  // A_V: the d x n matrix whose columns are the vectors.
  const IntMatrix& matrix() const { return matrix_; }

 private:
  VectorConfig() = default;
  void Init(size_t dim, std::vector<IntVector> vectors);

  size_t dim_ = 0;
  std::vector<IntVector> vectors_;
  IntMatrix matrix_;
};

// True iff no nonzero nonnegative vector lies in ker(A_V); decided by one
// feasibility problem.
bool IsStronglyConvexByFeasibility(const VectorConfig& v);

// Index of some vector that is a nonnegative combination of the others.
// Returns size() if the generating set is minimal.
size_t FindRedundantVector(const VectorConfig& v);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_VECTOR_CONFIG_H_
