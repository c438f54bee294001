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

// The vector matroid of a configuration: rank, circuits, Gale duality.

#ifndef SIGNED_TORIC_MATROID_H_
#define SIGNED_TORIC_MATROID_H_

#include <cstddef>
#include <vector>

#include "signed_toric/int_matrix.h"
#include "signed_toric/vector_config.h"

namespace signed_toric {

// A minimal dependent set C with its primitive kernel vector a_C. The entry
// of a_C at the smallest index of C is positive.
struct MatroidCircuit {
  std::vector<size_t> support;
  IntVector vector;
};

size_t MatroidRank(const VectorConfig& v, const std::vector<size_t>& subset);
size_t ColumnRank(const IntMatrix& a, const std::vector<size_t>& columns);

// All circuits of the column matroid of `a`, sorted by support. Throws
// LimitExceeded if a has more than `limit` columns.
std::vector<MatroidCircuit> ColumnCircuits(
    const IntMatrix& a, size_t limit = kDefaultEnumerationLimit);

std::vector<MatroidCircuit> Circuits(const VectorConfig& v,
                                     size_t limit = kDefaultEnumerationLimit);

// No circuit vector is one-signed.
bool IsStronglyConvex(const VectorConfig& v,
                      size_t limit = kDefaultEnumerationLimit);

// The t x n matrix whose columns are the Gale vectors: the transpose of
// `kernel_choice` if given (validated), else of KernelBasis(A_V).
IntMatrix GaleMatrix(const IntMatrix& a, const IntMatrix* kernel_choice = nullptr);

std::vector<IntVector> GaleVectors(const VectorConfig& v,
                                   const IntMatrix* kernel_choice = nullptr);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_MATROID_H_
