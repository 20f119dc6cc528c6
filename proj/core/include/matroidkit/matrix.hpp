// Copyright 2026 The matroidkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDKIT_MATRIX_HPP_
#define MATROIDKIT_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "matroidkit/field.hpp"

namespace matroidkit {

/// Dense row-major matrix over an exact field. Immutable once built.
class Matrix {
 public:
  /// Zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Throws kDimensionMismatch if entries.size() != rows * cols and
  /// kFieldMismatch if an entry does not belong to `field`.
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix from_integers(const Field& field, std::size_t rows, std::size_t cols,
                              std::span<const std::int64_t> values);
  static Matrix from_integers(const Field& field, std::size_t rows, std::size_t cols,
                              std::initializer_list<std::int64_t> values) {
    return from_integers(field, rows, cols, std::span<const std::int64_t>(values.begin(), values.size()));
  }
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  std::vector<Scalar> column(std::size_t c) const;
  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;

  /// A * c. Throws kDimensionMismatch unless c.size() == cols().
  std::vector<Scalar> apply(std::span<const Scalar> c) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

}  // namespace matroidkit

#endif  // MATROIDKIT_MATRIX_HPP_
