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

#include "signed_toric/subset_sums.h"

#include <bit>
#include <sstream>
#include <string>

#include "signed_toric/errors.h"
#include "signed_toric/normal_form.h"

namespace signed_toric {
namespace {

Rational Power(const Rational& base, size_t exponent) {
  Rational r = 1;
  for (size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

SubsetTable BuildSubsetTable(const IntMatrix& a, size_t limit) {
  const size_t n = a.cols();
  if (n > limit) {
    throw LimitExceeded("subset sum over " + std::to_string(n) +
                        " elements exceeds limit " + std::to_string(limit));
  }
  SubsetTable table;
  table.n = n;
  table.full_rank = Rank(a);
  const size_t count = size_t{1} << n;
  table.rank.resize(count);
  table.top_minor_gcd.resize(count);
  std::vector<size_t> columns;
  for (size_t mask = 0; mask < count; ++mask) {
    columns.clear();
    for (size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) columns.push_back(i);
    }
    if (columns.empty()) {
      table.rank[mask] = 0;
      table.top_minor_gcd[mask] = 1;
      continue;
    }
    SnfResult snf = SmithNormalForm(a.SelectColumns(columns));
    size_t r = snf.rank();
    Integer g = 1;
    for (size_t k = 0; k < r; ++k) g *= snf.diagonal[k];
    table.rank[mask] = r;
    table.top_minor_gcd[mask] = g;
  }
  return table;
}

Integer ConicCountFormula(const SubsetTable& table) {
  Integer total = 0;
  for (size_t mask = 0; mask < table.rank.size(); ++mask) {
    if (table.rank[mask] != table.full_rank) continue;
    size_t size = std::popcount(mask);
    if ((size - table.full_rank) % 2 == 0) {
      total += table.top_minor_gcd[mask];
    } else {
      total -= table.top_minor_gcd[mask];
    }
  }
  return total;
}

Integer ConicCountFormula(const IntMatrix& a, size_t limit) {
  return ConicCountFormula(BuildSubsetTable(a, limit));
}

Rational MultiplicityTutte(const SubsetTable& table, const Rational& x,
                           const Rational& y) {
  Rational total = 0;
  for (size_t mask = 0; mask < table.rank.size(); ++mask) {
    size_t r = table.rank[mask];
    size_t size = std::popcount(mask);
    total += Rational(table.top_minor_gcd[mask]) *
             Power(x - 1, table.full_rank - r) * Power(y - 1, size - r);
  }
  return total;
}

Rational MultiplicityTutte(const IntMatrix& a, const Rational& x,
                           const Rational& y, size_t limit) {
  return MultiplicityTutte(BuildSubsetTable(a, limit), x, y);
}

std::vector<Rational> EhrhartGaleZonotope(const SubsetTable& table) {
  const size_t n = table.n;
  const Integer& full = table.top_minor_gcd[table.rank.size() - 1];
  std::vector<Rational> coefficients(n - table.full_rank + 1);
  for (size_t mask = 0; mask < table.rank.size(); ++mask) {
    if (table.rank[mask] != table.full_rank) continue;
    const Integer& g = table.top_minor_gcd[mask];
    if (!mpz_divisible_p(g.get_mpz_t(), full.get_mpz_t())) {
      throw InvariantFailure("g_r(A) does not divide g_r(A_S)");
    }
    coefficients[n - std::popcount(mask)] += Rational(g, full);
  }
  for (Rational& c : coefficients) c.canonicalize();
  return coefficients;
}

std::vector<Rational> EhrhartGaleZonotope(const IntMatrix& a, size_t limit) {
  return EhrhartGaleZonotope(BuildSubsetTable(a, limit));
}

Rational EvaluatePolynomial(const std::vector<Rational>& coefficients,
                            const Rational& t) {
  Rational value = 0;
  for (size_t k = coefficients.size(); k-- > 0;) {
    value = value * t + coefficients[k];
  }
  return value;
}

std::string PolynomialToString(const std::vector<Rational>& coefficients) {
  std::ostringstream out;
  bool first = true;
  for (size_t k = coefficients.size(); k-- > 0;) {
    const Rational& c = coefficients[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) {
      out << mag.get_str();
      if (k > 0) out << "*";
    }
    if (k >= 1) out << "t";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace signed_toric
