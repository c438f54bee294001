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

#include "signed_toric/class_group.h"

#include <sstream>
#include <vector>

#include "signed_toric/errors.h"
#include "signed_toric/matroid.h"
#include "signed_toric/normal_form.h"

namespace signed_toric {
namespace {

Integer Mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Integer ClassGroup::TorsionOrder() const {
  Integer order = 1;
  for (const Integer& s : torsion) order *= s;
  return order;
}

std::string ClassGroup::ToString() const {
  if (IsTrivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const Integer& s : torsion) {
    if (!first) out << " x ";
    out << "Z/" << s.get_str();
    first = false;
  }
  return out.str();
}

std::string ClassElement::ToString() const {
  std::string s = VectorToString(free);
  if (!torsion.empty()) s += "+" + VectorToString(torsion);
  return s;
}

ClassElement WeightSystem::Weight(size_t i) const {
  return {free_part.Column(i), torsion_part.Column(i)};
}

ClassElement WeightSystem::Image(const IntVector& a) const {
  ClassElement e{Multiply(free_part, a), Multiply(torsion_part, a)};
  for (size_t j = 0; j < e.torsion.size(); ++j) {
    e.torsion[j] = Mod(e.torsion[j], group.torsion[j]);
  }
  return e;
}

ClassGroup ComputeClassGroup(const IntMatrix& a) {
  SnfResult snf = SmithNormalForm(a);
  ClassGroup g;
  g.free_rank = a.cols() - snf.rank();
  for (const Integer& s : snf.diagonal) {
    if (s > 1) g.torsion.push_back(s);
  }
  return g;
}

ClassGroup ComputeClassGroup(const VectorConfig& v) {
  return ComputeClassGroup(v.matrix());
}

WeightSystem ComputeWeightSystem(const IntMatrix& a,
                                 const IntMatrix* kernel_choice) {
  const size_t n = a.cols();
  WeightSystem w;
  w.free_part = GaleMatrix(a, kernel_choice);
  // U A^T W = D; coordinate i of U x is defined modulo s_i.
  SnfResult snf = SmithNormalForm(a.Transpose());
  std::vector<IntVector> rows;
  for (size_t i = 0; i < snf.diagonal.size(); ++i) {
    const Integer& s = snf.diagonal[i];
    if (s <= 1) continue;
    IntVector row = snf.left_transform.Row(i);
    for (Integer& x : row) x = Mod(x, s);
    rows.push_back(row);
    w.group.torsion.push_back(s);
  }
  w.group.free_rank = w.free_part.rows();
  w.torsion_part = IntMatrix::FromRows(rows, n);
  return w;
}

WeightSystem ComputeWeightSystem(const VectorConfig& v,
                                 const IntMatrix* kernel_choice) {
  return ComputeWeightSystem(v.matrix(), kernel_choice);
}

bool VerifyExactness(const IntMatrix& a, const WeightSystem& w,
                     std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why != nullptr) *why = message;
    return false;
  };
  const size_t n = a.cols();
  const size_t t = w.group.free_rank;
  const size_t k = w.group.torsion.size();
  if (w.free_part.rows() != t || w.free_part.cols() != n ||
      w.torsion_part.rows() != k || w.torsion_part.cols() != n) {
    return fail("weight matrices have the wrong shape");
  }
  if (!(w.free_part * a.Transpose()).IsZero()) {
    return fail("free part does not vanish on im(A^T)");
  }
  IntMatrix tors = w.torsion_part * a.Transpose();
  for (size_t j = 0; j < k; ++j) {
    for (size_t c = 0; c < tors.cols(); ++c) {
      if (Mod(tors(j, c), w.group.torsion[j]) != 0) {
        return fail("torsion part does not vanish on im(A^T)");
      }
    }
  }
  // Surjectivity: [weights | relations] presents the trivial group.
  IntMatrix pres(t + k, n + k);
  for (size_t i = 0; i < t; ++i) {
    for (size_t c = 0; c < n; ++c) pres(i, c) = w.free_part(i, c);
  }
  for (size_t j = 0; j < k; ++j) {
    for (size_t c = 0; c < n; ++c) pres(t + j, c) = w.torsion_part(j, c);
    pres(t + j, n + j) = w.group.torsion[j];
  }
  SnfResult snf = SmithNormalForm(pres);
  if (snf.rank() != t + k) return fail("weights do not generate the group");
  for (size_t i = 0; i < t + k; ++i) {
    if (snf.diagonal[i] != 1) return fail("weights do not generate the group");
  }
  // Kernel equals im(A^T): the group orders must agree as well.
  if (!(ComputeClassGroup(a) == w.group)) {
    return fail("class group structure mismatch");
  }
  return true;
}

ClassElement CanonicalClass(const WeightSystem& w) {
  return w.Image(IntVector(w.size(), 1));
}

}  // namespace signed_toric
