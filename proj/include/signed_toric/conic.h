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

// The region of conic classes in the free part of the class group and its
// lattice points.

#ifndef SIGNED_TORIC_CONIC_H_
#define SIGNED_TORIC_CONIC_H_

#include <cstddef>
#include <string>
#include <vector>

#include "signed_toric/class_group.h"
#include "signed_toric/int_matrix.h"
#include "signed_toric/matroid.h"
#include "signed_toric/vector_config.h"

namespace signed_toric {

// lower < functional . z < upper (strict in the open region).
struct Facet {
  IntVector functional;
  Integer lower;
  Integer upper;
  size_t circuit_index = 0;

  std::string ToString() const;  // "-2 < z1 - z2 < 2"

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.functional == b.functional && a.lower == b.lower &&
           a.upper == b.upper;
  }
};

struct ConicPolytope {
  size_t ambient_dim = 0;
  std::vector<Facet> facets;
};

enum class Closure { kOpen, kClosed };

// One facet pair per circuit C: the functional c with c . beta~_i = a_C(i)
// and bounds (-|a_C^-|, |a_C^+|).
ConicPolytope ComputeConicPolytope(const std::vector<MatroidCircuit>& circuits,
                                   const WeightSystem& w);
ConicPolytope ComputeConicPolytope(const VectorConfig& v, const WeightSystem& w,
                                   size_t limit = kDefaultEnumerationLimit);

// Merges facets whose functionals agree up to sign, keeping the tightest
// bounds. The region is unchanged.
ConicPolytope ReduceFacets(const ConicPolytope& p);

bool Contains(const ConicPolytope& p, const IntVector& z, Closure closure,
              const Integer& dilation = 1);

// All integer points of the (dilated) region in lexicographic order. Throws
// InvariantFailure if the facets do not bound the region.
std::vector<IntVector> LatticePoints(const ConicPolytope& p, Closure closure,
                                     const Integer& dilation = 1);

// Number of open lattice points times the torsion order.
Integer ConicCountEnumeration(const VectorConfig& v,
                              size_t limit = kDefaultEnumerationLimit);

// Decides whether a = ceil(A^T x) for some real x, via exact feasibility of
// a_i - 1 < (A^T x)_i <= a_i.
bool IsConicClass(const IntMatrix& a_matrix, const IntVector& a);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_CONIC_H_
