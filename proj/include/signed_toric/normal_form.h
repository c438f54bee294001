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

// Exact normal forms and derived invariants of integer matrices.

#ifndef SIGNED_TORIC_NORMAL_FORM_H_
#define SIGNED_TORIC_NORMAL_FORM_H_

#include <cstddef>
#include <optional>

#include "signed_toric/int_matrix.h"

namespace signed_toric {

// U * M * W == D where D is diagonal with entries `diagonal` (length
// min(rows, cols)). Nonzero entries come first, are positive and each
// divides the next.
struct SnfResult {
  IntVector diagonal;
  IntMatrix left_transform;   // U, rows x rows, unimodular
  IntMatrix right_transform;  // W, cols x cols, unimodular

  size_t rank() const;
  IntMatrix DiagonalMatrix(size_t rows, size_t cols) const;
};

// Pivots on the smallest nonzero absolute value, first in row-major order,
// so the transforms are reproducible.
SnfResult SmithNormalForm(const IntMatrix& m);

// Row-style Hermite normal form: echelon, positive pivots, entries above
// each pivot reduced into [0, pivot). Zero rows are kept at the bottom.
IntMatrix HermiteNormalForm(const IntMatrix& m);

size_t Rank(const IntMatrix& m);

Integer Determinant(const IntMatrix& m);

// Gcd of all i x i minors: 1 for i == 0, 0 for i > rank.
Integer MinorGcd(const IntMatrix& m, size_t i);

// Columns form a lattice basis of the integer kernel {x : m x = 0}. The
// basis is normalized so that its transpose is in Hermite normal form.
IntMatrix KernelBasis(const IntMatrix& m);

// True iff the columns of `basis` are a saturated basis of ker(m).
bool IsKernelBasis(const IntMatrix& m, const IntMatrix& basis);

// Throws ValidationError if m is not square with determinant +-1.
IntMatrix UnimodularInverse(const IntMatrix& m);

// Some rational x with m x == b (free variables set to zero), if any.
std::optional<RatVector> SolveRational(const IntMatrix& m, const IntVector& b);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_NORMAL_FORM_H_
