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

// Divisor class group Z^n / im(A^T) of a toric ring and a projection onto it.

#ifndef SIGNED_TORIC_CLASS_GROUP_H_
#define SIGNED_TORIC_CLASS_GROUP_H_

#include <cstddef>
#include <string>

#include "signed_toric/int_matrix.h"
#include "signed_toric/vector_config.h"

namespace signed_toric {

// Z^free_rank + Z/s_1 + ... with 1 < s_1 | s_2 | ...
struct ClassGroup {
  size_t free_rank = 0;
  IntVector torsion;

  Integer TorsionOrder() const;
  bool IsTrivial() const { return free_rank == 0 && torsion.empty(); }
  // "Z^3", "Z^2 x Z/2", "0".
  std::string ToString() const;

  friend bool operator==(const ClassGroup& a, const ClassGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

// An element of a ClassGroup. Torsion residues lie in [0, s_i).
struct ClassElement {
  IntVector free;
  IntVector torsion;

  bool IsZero() const { return IsZeroVector(free) && IsZeroVector(torsion); }
  std::string ToString() const;

  friend bool operator==(const ClassElement& a, const ClassElement& b) {
    return a.free == b.free && a.torsion == b.torsion;
  }
};

// The projection pi: Z^n -> Z^t + torsion, stored as the images of the unit
// vectors (the weights beta_i).
struct WeightSystem {
  ClassGroup group;
  IntMatrix free_part;     // t x n; column i is the free part of beta_i
  IntMatrix torsion_part;  // k x n; row j is reduced mod group.torsion[j]

  size_t size() const { return free_part.cols(); }
  ClassElement Weight(size_t i) const;
  ClassElement Image(const IntVector& a) const;
};

ClassGroup ComputeClassGroup(const IntMatrix& a);
ClassGroup ComputeClassGroup(const VectorConfig& v);

// Free part from the Gale vectors of `kernel_choice` (or the default kernel
// basis); torsion part from the rows of the left Smith transform of A^T
// whose invariant factor exceeds 1.
WeightSystem ComputeWeightSystem(const IntMatrix& a,
                                 const IntMatrix* kernel_choice = nullptr);
WeightSystem ComputeWeightSystem(const VectorConfig& v,
                                 const IntMatrix* kernel_choice = nullptr);

// Checks pi o A^T == 0 and that the weights generate the group. On failure
// returns false and describes the problem in *why.
bool VerifyExactness(const IntMatrix& a, const WeightSystem& w,
                     std::string* why = nullptr);

// Sum of all weights.
ClassElement CanonicalClass(const WeightSystem& w);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_CLASS_GROUP_H_
