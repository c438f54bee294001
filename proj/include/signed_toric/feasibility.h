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

#ifndef SIGNED_TORIC_FEASIBILITY_H_
#define SIGNED_TORIC_FEASIBILITY_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "signed_toric/int_matrix.h"

namespace signed_toric {

enum class Relation { kGe, kGt, kLe, kLt, kEq };

// coefficients . x  <relation>  bound
struct LinearConstraint {
  IntVector coefficients;
  Relation relation;
  Integer bound;
};

// Decides exactly whether the system has a rational solution in Q^num_vars
// and returns one if so. Uses a phase-one simplex with Bland's rule; strict
// inequalities are shifted by a symbolic infinitesimal.
std::optional<RatVector> RationalFeasible(
    const std::vector<LinearConstraint>& constraints, size_t num_vars);

bool Satisfies(const std::vector<LinearConstraint>& constraints,
               const RatVector& x);

// Nonnegative coefficients expressing `target` in terms of `generators`, if
// the target lies in their cone.
std::optional<RatVector> ConeCoefficients(
    const std::vector<IntVector>& generators, const IntVector& target);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_FEASIBILITY_H_
