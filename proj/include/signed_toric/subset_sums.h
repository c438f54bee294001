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

// Sums over all column subsets S weighted by minor gcds of A_S: the conic
// count, the multiplicity Tutte polynomial and the Ehrhart polynomial of the
// Gale zonotope.

#ifndef SIGNED_TORIC_SUBSET_SUMS_H_
#define SIGNED_TORIC_SUBSET_SUMS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "signed_toric/int_matrix.h"
#include "signed_toric/vector_config.h"

namespace signed_toric {

// rank(A_S) and g_{rank(A_S)}(A_S) for every subset S, indexed by bitmask.
struct SubsetTable {
  size_t n = 0;
  size_t full_rank = 0;
  std::vector<size_t> rank;
  std::vector<Integer> top_minor_gcd;
};

SubsetTable BuildSubsetTable(const IntMatrix& a,
                             size_t limit = kDefaultEnumerationLimit);

// sum_S (-1)^{|S| - r} g_r(A_S).
Integer ConicCountFormula(const SubsetTable& table);
Integer ConicCountFormula(const IntMatrix& a,
                          size_t limit = kDefaultEnumerationLimit);

// sum_S g_{rk S}(A_S) (x-1)^{r - rk S} (y-1)^{|S| - rk S}, with 0^0 = 1.
Rational MultiplicityTutte(const SubsetTable& table, const Rational& x,
                           const Rational& y);
Rational MultiplicityTutte(const IntMatrix& a, const Rational& x,
                           const Rational& y,
                           size_t limit = kDefaultEnumerationLimit);

// Coefficients (index = power of t) of sum_S g_r(A_S)/g_r(A) t^{n-|S|}.
std::vector<Rational> EhrhartGaleZonotope(const SubsetTable& table);
std::vector<Rational> EhrhartGaleZonotope(
    const IntMatrix& a, size_t limit = kDefaultEnumerationLimit);

Rational EvaluatePolynomial(const std::vector<Rational>& coefficients,
                            const Rational& t);

// "3*t^2 + 1/2*t + 1"
std::string PolynomialToString(const std::vector<Rational>& coefficients);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_SUBSET_SUMS_H_
