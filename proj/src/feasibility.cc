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

#include "signed_toric/feasibility.h"

#include <utility>

#include "signed_toric/errors.h"

namespace signed_toric {
namespace {

// value + eps * infinitesimal, ordered lexicographically.
struct Lex {
  Rational value;
  Rational eps;

  int Sign() const {
    if (value != 0) return sgn(value);
    return sgn(eps);
  }
};

Lex operator-(const Lex& a, const Lex& b) {
  return {a.value - b.value, a.eps - b.eps};
}
Lex operator*(const Rational& f, const Lex& a) {
  return {f * a.value, f * a.eps};
}
bool operator<(const Lex& a, const Lex& b) { return (a - b).Sign() < 0; }

struct Tableau {
  std::vector<RatVector> rows;
  std::vector<Lex> rhs;
  std::vector<size_t> basis;
  RatVector objective;
  Lex objective_rhs;

  void Pivot(size_t r, size_t c) {
    Rational inv = 1 / rows[r][c];
    for (Rational& x : rows[r]) x *= inv;
    rhs[r] = inv * rhs[r];
    auto eliminate = [&](RatVector& row, Lex& value) {
      if (row[c] == 0) return;
      Rational f = row[c];
      for (size_t j = 0; j < row.size(); ++j) row[j] -= f * rows[r][j];
      value = value - f * rhs[r];
    };
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != r) eliminate(rows[i], rhs[i]);
    }
    eliminate(objective, objective_rhs);
    basis[r] = c;
  }
};

Rational Evaluate(const IntVector& a, const RatVector& x) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace

bool Satisfies(const std::vector<LinearConstraint>& constraints,
               const RatVector& x) {
  for (const LinearConstraint& c : constraints) {
    Rational lhs = Evaluate(c.coefficients, x);
    bool ok = false;
    switch (c.relation) {
      case Relation::kGe: ok = lhs >= c.bound; break;
      case Relation::kGt: ok = lhs > c.bound; break;
      case Relation::kLe: ok = lhs <= c.bound; break;
      case Relation::kLt: ok = lhs < c.bound; break;
      case Relation::kEq: ok = lhs == c.bound; break;
    }
    if (!ok) return false;
  }
  return true;
}

std::optional<RatVector> RationalFeasible(
    const std::vector<LinearConstraint>& constraints, size_t num_vars) {
  const size_t m = constraints.size();
  size_t num_slack = 0;
  for (const LinearConstraint& c : constraints) {
    if (c.coefficients.size() != num_vars) {
      throw ValidationError("constraint has wrong number of coefficients");
    }
    if (c.relation != Relation::kEq) ++num_slack;
  }
  // Columns: x+ (num_vars), x- (num_vars), slacks, artificials.
  const size_t slack0 = 2 * num_vars;
  const size_t art0 = slack0 + num_slack;
  const size_t width = art0 + m;

  Tableau tab;
  tab.rows.assign(m, RatVector(width));
  tab.rhs.resize(m);
  tab.basis.resize(m);
  size_t slack = slack0;
  for (size_t i = 0; i < m; ++i) {
    const LinearConstraint& c = constraints[i];
    int flip = (c.relation == Relation::kGe || c.relation == Relation::kGt)
                   ? -1 : 1;
    RatVector& row = tab.rows[i];
    for (size_t j = 0; j < num_vars; ++j) {
      row[j] = flip * c.coefficients[j];
      row[num_vars + j] = -row[j];
    }
    Lex b{Rational(flip * c.bound), 0};
    if (c.relation == Relation::kGt || c.relation == Relation::kLt) b.eps = -1;
    if (c.relation != Relation::kEq) row[slack++] = 1;
    if (b.Sign() < 0) {
      for (Rational& x : row) x = -x;
      b = Rational(-1) * b;
    }
    tab.rhs[i] = b;
    row[art0 + i] = 1;
    tab.basis[i] = art0 + i;
  }

  // Phase one: minimize the sum of artificials.
  tab.objective.assign(width, 0);
  tab.objective_rhs = {0, 0};
  for (size_t j = art0; j < width; ++j) tab.objective[j] = 1;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < width; ++j) tab.objective[j] -= tab.rows[i][j];
    tab.objective_rhs = tab.objective_rhs - tab.rhs[i];
  }

  while (true) {
    size_t enter = width;
    for (size_t j = 0; j < width; ++j) {
      if (tab.objective[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    size_t leave = m;
    Lex best;
    for (size_t i = 0; i < m; ++i) {
      if (tab.rows[i][enter] <= 0) continue;
      Lex ratio = Rational(1 / tab.rows[i][enter]) * tab.rhs[i];
      if (leave == m || ratio < best ||
          (!(best < ratio) && tab.basis[i] < tab.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero.
    if (leave == m) throw InvariantFailure("phase one unbounded");
    tab.Pivot(leave, enter);
  }
  if (tab.objective_rhs.Sign() != 0) return std::nullopt;

  RatVector base(num_vars), tilt(num_vars);
  for (size_t i = 0; i < m; ++i) {
    size_t v = tab.basis[i];
    if (v < num_vars) {
      base[v] += tab.rhs[i].value;
      tilt[v] += tab.rhs[i].eps;
    } else if (v < 2 * num_vars) {
      base[v - num_vars] -= tab.rhs[i].value;
      tilt[v - num_vars] -= tab.rhs[i].eps;
    }
  }
  // Any sufficiently small positive infinitesimal works; halve until it does.
  Rational eps = 1;
  for (int attempt = 0; attempt < 4096; ++attempt) {
    RatVector x(num_vars);
    for (size_t j = 0; j < num_vars; ++j) x[j] = base[j] + eps * tilt[j];
    if (Satisfies(constraints, x)) return x;
    eps /= 2;
  }
  throw InvariantFailure("could not realize symbolic perturbation");
}

std::optional<RatVector> ConeCoefficients(
    const std::vector<IntVector>& generators, const IntVector& target) {
  const size_t k = generators.size();
  std::vector<LinearConstraint> constraints;
  for (size_t i = 0; i < target.size(); ++i) {
    LinearConstraint c{IntVector(k), Relation::kEq, target[i]};
    for (size_t j = 0; j < k; ++j) c.coefficients[j] = generators[j][i];
    constraints.push_back(std::move(c));
  }
  for (size_t j = 0; j < k; ++j) {
    LinearConstraint c{IntVector(k), Relation::kGe, 0};
    c.coefficients[j] = 1;
    constraints.push_back(std::move(c));
  }
  return RationalFeasible(constraints, k);
}

}  // namespace signed_toric
