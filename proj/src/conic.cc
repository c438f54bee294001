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

#include "signed_toric/conic.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "signed_toric/errors.h"
#include "signed_toric/feasibility.h"
#include "signed_toric/normal_form.h"

namespace signed_toric {
namespace {

Integer Dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer FloorOf(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer CeilOf(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Coordinate bounds of the closed region from t independent facets.
void BoundingBox(const ConicPolytope& p, const Integer& dilation,
                 IntVector* lo, IntVector* hi) {
  const size_t t = p.ambient_dim;
  std::vector<size_t> order(p.facets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return p.facets[a].upper - p.facets[a].lower <
           p.facets[b].upper - p.facets[b].lower;
  });
  std::vector<IntVector> chosen_rows;
  std::vector<size_t> chosen;
  for (size_t f : order) {
    if (chosen.size() == t) break;
    chosen_rows.push_back(p.facets[f].functional);
    if (Rank(IntMatrix::FromRows(chosen_rows, t)) == chosen_rows.size()) {
      chosen.push_back(f);
    } else {
      chosen_rows.pop_back();
    }
  }
  if (chosen.size() != t) {
    throw InvariantFailure("facet system does not bound the region");
  }
  IntMatrix f = IntMatrix::FromRows(chosen_rows, t);
  // Columns of the inverse of f.
  std::vector<RatVector> inverse_columns;
  for (size_t k = 0; k < t; ++k) {
    IntVector e(t);
    e[k] = 1;
    inverse_columns.push_back(*SolveRational(f, e));
  }
  lo->assign(t, 0);
  hi->assign(t, 0);
  for (size_t i = 0; i < t; ++i) {
    Rational low = 0, high = 0;
    for (size_t k = 0; k < t; ++k) {
      const Rational& g = inverse_columns[k][i];
      Rational a = g * Rational(p.facets[chosen[k]].lower * dilation);
      Rational b = g * Rational(p.facets[chosen[k]].upper * dilation);
      low += std::min(a, b);
      high += std::max(a, b);
    }
    (*lo)[i] = CeilOf(low);
    (*hi)[i] = FloorOf(high);
  }
}

}  // namespace

std::string Facet::ToString() const {
  std::ostringstream out;
  out << lower.get_str() << " < ";
  bool first = true;
  for (size_t i = 0; i < functional.size(); ++i) {
    const Integer& c = functional[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "z" << (i + 1);
    first = false;
  }
  if (first) out << "0";
  out << " < " << upper.get_str();
  return out.str();
}

ConicPolytope ComputeConicPolytope(const std::vector<MatroidCircuit>& circuits,
                                   const WeightSystem& w) {
  ConicPolytope p;
  p.ambient_dim = w.group.free_rank;
  // c . G = a_C, i.e. G^T c = a_C.
  IntMatrix gt = w.free_part.Transpose();
  for (size_t k = 0; k < circuits.size(); ++k) {
    const MatroidCircuit& c = circuits[k];
    std::optional<RatVector> sol = SolveRational(gt, c.vector);
    if (!sol) throw InvariantFailure("circuit vector outside the kernel lattice");
    Facet f;
    f.circuit_index = k;
    for (const Rational& x : *sol) {
      if (x.get_den() != 1) {
        throw InvariantFailure("facet functional is not integral");
      }
      f.functional.push_back(x.get_num());
    }
    f.lower = 0;
    f.upper = 0;
    for (const Integer& x : c.vector) {
      if (x > 0) f.upper += x;
      if (x < 0) f.lower += x;
    }
    p.facets.push_back(std::move(f));
  }
  return p;
}

ConicPolytope ComputeConicPolytope(const VectorConfig& v, const WeightSystem& w,
                                   size_t limit) {
  return ComputeConicPolytope(Circuits(v, limit), w);
}

ConicPolytope ReduceFacets(const ConicPolytope& p) {
  ConicPolytope out;
  out.ambient_dim = p.ambient_dim;
  for (const Facet& f : p.facets) {
    Facet g = f;
    // Normalize so the first nonzero coefficient is positive.
    auto first = std::find_if(g.functional.begin(), g.functional.end(),
                              [](const Integer& x) { return x != 0; });
    if (first != g.functional.end() && *first < 0) {
      for (Integer& x : g.functional) x = -x;
      Integer lower = -g.upper;
      g.upper = -g.lower;
      g.lower = lower;
    }
    auto same = std::find_if(out.facets.begin(), out.facets.end(),
                             [&](const Facet& h) {
                               return h.functional == g.functional;
                             });
    if (same == out.facets.end()) {
      out.facets.push_back(std::move(g));
    } else {
      if (g.lower > same->lower) same->lower = g.lower;
      if (g.upper < same->upper) same->upper = g.upper;
    }
  }
  return out;
}

bool Contains(const ConicPolytope& p, const IntVector& z, Closure closure,
              const Integer& dilation) {
  for (const Facet& f : p.facets) {
    Integer value = Dot(f.functional, z);
    Integer lower = f.lower * dilation;
    Integer upper = f.upper * dilation;
    if (closure == Closure::kOpen) {
      if (!(lower < value && value < upper)) return false;
    } else {
      if (!(lower <= value && value <= upper)) return false;
    }
  }
  return true;
}

std::vector<IntVector> LatticePoints(const ConicPolytope& p, Closure closure,
                                     const Integer& dilation) {
  const size_t t = p.ambient_dim;
  std::vector<IntVector> points;
  if (t == 0) {
    if (Contains(p, {}, closure, dilation)) points.push_back({});
    return points;
  }
  IntVector lo, hi;
  BoundingBox(p, dilation, &lo, &hi);
  const size_t m = p.facets.size();

  // rest_min[f][i], rest_max[f][i]: range of sum_{j >= i} c_j z_j over the box.
  std::vector<IntVector> rest_min(m, IntVector(t + 1));
  std::vector<IntVector> rest_max(m, IntVector(t + 1));
  std::vector<Integer> lower(m), upper(m);
  for (size_t f = 0; f < m; ++f) {
    const IntVector& c = p.facets[f].functional;
    for (size_t i = t; i-- > 0;) {
      Integer a = c[i] * lo[i], b = c[i] * hi[i];
      rest_min[f][i] = rest_min[f][i + 1] + std::min(a, b);
      rest_max[f][i] = rest_max[f][i + 1] + std::max(a, b);
    }
    lower[f] = p.facets[f].lower * dilation;
    upper[f] = p.facets[f].upper * dilation;
  }
  const bool open = closure == Closure::kOpen;
  IntVector z(t);
  std::vector<Integer> partial(m);
  std::function<void(size_t)> descend = [&](size_t i) {
    if (i == t) {
      for (size_t f = 0; f < m; ++f) {
        if (open ? !(lower[f] < partial[f] && partial[f] < upper[f])
                 : !(lower[f] <= partial[f] && partial[f] <= upper[f])) {
          return;
        }
      }
      points.push_back(z);
      return;
    }
    for (z[i] = lo[i]; z[i] <= hi[i]; ++z[i]) {
      bool feasible = true;
      for (size_t f = 0; f < m && feasible; ++f) {
        Integer s = partial[f] + p.facets[f].functional[i] * z[i];
        Integer smax = s + rest_max[f][i + 1];
        Integer smin = s + rest_min[f][i + 1];
        if (open ? (smax <= lower[f] || smin >= upper[f])
                 : (smax < lower[f] || smin > upper[f])) {
          feasible = false;
        }
      }
      if (!feasible) continue;
      for (size_t f = 0; f < m; ++f) {
        partial[f] += p.facets[f].functional[i] * z[i];
      }
      descend(i + 1);
      for (size_t f = 0; f < m; ++f) {
        partial[f] -= p.facets[f].functional[i] * z[i];
      }
    }
  };
  descend(0);
  return points;
}

Integer ConicCountEnumeration(const VectorConfig& v, size_t limit) {
  WeightSystem w = ComputeWeightSystem(v);
  ConicPolytope p = ComputeConicPolytope(v, w, limit);
  Integer open_points = LatticePoints(p, Closure::kOpen).size();
  return open_points * w.group.TorsionOrder();
}

bool IsConicClass(const IntMatrix& a_matrix, const IntVector& a) {
  const size_t d = a_matrix.rows();
  const size_t n = a_matrix.cols();
  if (a.size() != n) throw ValidationError("class vector has wrong length");
  std::vector<LinearConstraint> constraints;
  for (size_t i = 0; i < n; ++i) {
    IntVector v = a_matrix.Column(i);
    constraints.push_back({v, Relation::kGt, a[i] - 1});
    constraints.push_back({v, Relation::kLe, a[i]});
  }
  return RationalFeasible(constraints, d).has_value();
}

}  // namespace signed_toric
