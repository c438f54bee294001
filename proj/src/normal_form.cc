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

#include "signed_toric/normal_form.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "signed_toric/errors.h"

namespace signed_toric {
namespace {

bool AbsLess(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

// Locates the nonzero entry of least absolute value in the lower-right block
// starting at (t, t). Returns false if the block is zero.
bool FindBlockPivot(const IntMatrix& a, size_t t, size_t* pi, size_t* pj) {
  bool found = false;
  for (size_t i = t; i < a.rows(); ++i) {
    for (size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!found || AbsLess(a(i, j), a(*pi, *pj))) {
        *pi = i;
        *pj = j;
        found = true;
      }
    }
  }
  return found;
}

// Rational row reduction to reduced echelon form; returns pivot columns.
std::vector<size_t> RowReduce(std::vector<RatVector>& rows, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (Rational& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t SnfResult::rank() const {
  size_t r = 0;
  while (r < diagonal.size() && diagonal[r] != 0) ++r;
  return r;
}

IntMatrix SnfResult::DiagonalMatrix(size_t rows, size_t cols) const {
  IntMatrix d(rows, cols);
  for (size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

SnfResult SmithNormalForm(const IntMatrix& m) {
  const size_t rows = m.rows();
  const size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::Identity(rows);
  IntMatrix w = IntMatrix::Identity(cols);
  const size_t n = std::min(rows, cols);

  for (size_t t = 0; t < n; ++t) {
    size_t pi = 0, pj = 0;
    if (!FindBlockPivot(a, t, &pi, &pj)) break;
    a.SwapRows(t, pi);
    u.SwapRows(t, pi);
    a.SwapColumns(t, pj);
    w.SwapColumns(t, pj);

    while (true) {
      // Move the smallest nonzero entry of row t / column t to (t, t).
      size_t bi = t, bj = t;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) != 0 && AbsLess(a(i, t), a(bi, bj))) bi = i, bj = t;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) != 0 && AbsLess(a(t, j), a(bi, bj))) bi = t, bj = j;
      }
      if (bi != t) {
        a.SwapRows(t, bi);
        u.SwapRows(t, bi);
      }
      if (bj != t) {
        a.SwapColumns(t, bj);
        w.SwapColumns(t, bj);
      }

      bool residue = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.AddRowMultiple(i, t, -q);
        u.AddRowMultiple(i, t, -q);
        if (a(i, t) != 0) residue = true;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.AddColumnMultiple(j, t, -q);
        w.AddColumnMultiple(j, t, -q);
        if (a(t, j) != 0) residue = true;
      }
      if (residue) continue;

      // Row t and column t are clear; enforce divisibility of the block.
      size_t bad = rows;
      for (size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      a.AddRowMultiple(t, bad, 1);
      u.AddRowMultiple(t, bad, 1);
    }
    if (a(t, t) < 0) {
      a.NegateRow(t);
      u.NegateRow(t);
    }
  }

  SnfResult result;
  result.diagonal.resize(n);
  for (size_t i = 0; i < n; ++i) result.diagonal[i] = a(i, i);
  result.left_transform = std::move(u);
  result.right_transform = std::move(w);
  return result;
}

IntMatrix HermiteNormalForm(const IntMatrix& m) {
  IntMatrix h = m;
  size_t row = 0;
  for (size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    while (true) {
      size_t best = h.rows();
      for (size_t i = row; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (best == h.rows() || AbsLess(h(i, col), h(best, col))) best = i;
      }
      if (best == h.rows()) break;
      h.SwapRows(row, best);
      bool done = true;
      for (size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
        h.AddRowMultiple(i, row, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) h.NegateRow(row);
    for (size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
      h.AddRowMultiple(i, row, -q);
    }
    ++row;
  }
  return h;
}

size_t Rank(const IntMatrix& m) {
  // Fraction-free (Bareiss) elimination; every division is exact.
  IntMatrix a = m;
  size_t r = 0;
  Integer prev = 1;
  for (size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    size_t p = r;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.SwapRows(r, p);
    for (size_t i = r + 1; i < a.rows(); ++i) {
      for (size_t j = col + 1; j < a.cols(); ++j) {
        Integer v = a(r, col) * a(i, j) - a(i, col) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(r, col);
    ++r;
  }
  return r;
}

Integer Determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of non-square");
  const size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.SwapRows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer MinorGcd(const IntMatrix& m, size_t i) {
  if (i == 0) return 1;
  if (i > std::min(m.rows(), m.cols())) return 0;
  SnfResult snf = SmithNormalForm(m);
  Integer g = 1;
  for (size_t k = 0; k < i; ++k) g *= snf.diagonal[k];
  return g;
}

IntMatrix KernelBasis(const IntMatrix& m) {
  SnfResult snf = SmithNormalForm(m);
  const size_t r = snf.rank();
  const size_t t = m.cols() - r;
  IntMatrix kt(t, m.cols());
  for (size_t k = 0; k < t; ++k) {
    for (size_t i = 0; i < m.cols(); ++i) {
      kt(k, i) = snf.right_transform(i, r + k);
    }
  }
  return HermiteNormalForm(kt).Transpose();
}

bool IsKernelBasis(const IntMatrix& m, const IntMatrix& basis) {
  if (basis.rows() != m.cols()) return false;
  if (basis.cols() != m.cols() - Rank(m)) return false;
  if (!(m * basis).IsZero()) return false;
  SnfResult snf = SmithNormalForm(basis);
  if (snf.rank() != basis.cols()) return false;
  for (const Integer& s : snf.diagonal) {
    if (s != 1) return false;
  }
  return true;
}

IntMatrix UnimodularInverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("inverse of non-square");
  const size_t n = m.rows();
  std::vector<RatVector> rows(n, RatVector(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n + i] = 1;
  }
  std::vector<size_t> pivots = RowReduce(rows, n);
  if (pivots.size() != n) throw ValidationError("matrix is singular");
  IntMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const Rational& x = rows[i][n + j];
      if (x.get_den() != 1) throw ValidationError("matrix is not unimodular");
      inv(i, j) = x.get_num();
    }
  }
  return inv;
}

std::optional<RatVector> SolveRational(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw ValidationError("right-hand side mismatch");
  const size_t n = m.cols();
  std::vector<RatVector> rows(m.rows(), RatVector(n + 1));
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n] = b[i];
  }
  std::vector<size_t> pivots = RowReduce(rows, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RatVector x(n);
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rows[k][n];
  return x;
}

}  // namespace signed_toric
