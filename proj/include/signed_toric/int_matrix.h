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

#ifndef SIGNED_TORIC_INT_MATRIX_H_
#define SIGNED_TORIC_INT_MATRIX_H_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace signed_toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix Identity(size_t n);
  static IntMatrix FromRows(const std::vector<IntVector>& rows, size_t cols);
  static IntMatrix FromColumns(const std::vector<IntVector>& columns,
                               size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(size_t i, size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector Row(size_t i) const;
  IntVector Column(size_t j) const;
  IntMatrix Transpose() const;
  IntMatrix SelectColumns(const std::vector<size_t>& columns) const;
  IntMatrix SelectRows(const std::vector<size_t>& rows) const;

  void SwapRows(size_t a, size_t b);
  void SwapColumns(size_t a, size_t b);
  // row[a] += factor * row[b]
  void AddRowMultiple(size_t a, size_t b, const Integer& factor);
  // col[a] += factor * col[b]
  void AddColumnMultiple(size_t a, size_t b, const Integer& factor);
  void NegateRow(size_t i);
  void NegateColumn(size_t j);

  bool IsZero() const;
  std::string ToString() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Matrix times column vector.
IntVector Multiply(const IntMatrix& m, const IntVector& x);

IntVector ToIntVector(std::initializer_list<long> values);
std::string VectorToString(const IntVector& v);
Integer VectorGcd(const IntVector& v);
bool IsZeroVector(const IntVector& v);

}  // namespace signed_toric

#endif  // SIGNED_TORIC_INT_MATRIX_H_
