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

#include "signed_toric/int_matrix.h"

#include <sstream>
#include <utility>

#include "signed_toric/errors.h"

namespace signed_toric {

IntMatrix::IntMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::Identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::FromRows(const std::vector<IntVector>& rows, size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("row length mismatch");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::FromColumns(const std::vector<IntVector>& columns,
                                 size_t rows) {
  IntMatrix m(rows, columns.size());
  for (size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw ValidationError("column length mismatch");
    }
    for (size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::Row(size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::Column(size_t j) const {
  IntVector c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::Transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::SelectColumns(const std::vector<size_t>& columns) const {
  IntMatrix m(rows_, columns.size());
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < columns.size(); ++k) {
      m(i, k) = (*this)(i, columns[k]);
    }
  }
  return m;
}

IntMatrix IntMatrix::SelectRows(const std::vector<size_t>& rows) const {
  IntMatrix m(rows.size(), cols_);
  for (size_t k = 0; k < rows.size(); ++k) {
    for (size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(rows[k], j);
  }
  return m;
}

void IntMatrix::SwapRows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::SwapColumns(size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::AddRowMultiple(size_t a, size_t b, const Integer& factor) {
  if (factor == 0) return;
  for (size_t j = 0; j < cols_; ++j) (*this)(a, j) += factor * (*this)(b, j);
}

void IntMatrix::AddColumnMultiple(size_t a, size_t b, const Integer& factor) {
  if (factor == 0) return;
  for (size_t i = 0; i < rows_; ++i) (*this)(i, a) += factor * (*this)(i, b);
}

void IntMatrix::NegateRow(size_t i) {
  for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::NegateColumn(size_t j) {
  for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntMatrix::IsZero() const {
  for (const Integer& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

std::string IntMatrix::ToString() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < rows_; ++i) {
    if (i > 0) out << ", ";
    out << VectorToString(Row(i));
  }
  out << "]";
  return out.str();
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

IntVector Multiply(const IntMatrix& m, const IntVector& x) {
  if (m.cols() != x.size()) throw ValidationError("vector length mismatch");
  IntVector y(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  }
  return y;
}

IntVector ToIntVector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string VectorToString(const IntVector& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ",";
    out << v[i].get_str();
  }
  out << ")";
  return out.str();
}

Integer VectorGcd(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g;
}

bool IsZeroVector(const IntVector& v) {
  for (const Integer& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace signed_toric
