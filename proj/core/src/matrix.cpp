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

#include "matroidkit/matrix.hpp"

#include <string>

#include "matroidkit/errors.hpp"

namespace matroidkit {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                    std::to_string(rows * cols));
  }
  for (const auto& x : entries_) {
    if (!field_.contains(x)) throw Error(ErrorCode::kFieldMismatch, "entry does not belong to field " + field_.name());
  }
}

Matrix Matrix::from_integers(const Field& field, std::size_t rows, std::size_t cols,
                             std::span<const std::int64_t> values) {
  std::vector<Scalar> entries;
  entries.reserve(values.size());
  for (auto v : values) entries.push_back(field.from_integer(v));
  return Matrix(field, rows, cols, std::move(entries));
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  std::vector<Scalar> entries(n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = field.one();
  return Matrix(field, n, n, std::move(entries));
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  std::vector<Scalar> out;
  out.reserve(rows_ * columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto c : columns) {
      if (c >= cols_) throw Error(ErrorCode::kDimensionMismatch, "column index out of range");
      out.push_back((*this)(r, c));
    }
  }
  return Matrix(field_, rows_, columns.size(), std::move(out));
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<Scalar> out;
  out.reserve(rows.size() * cols_);
  for (auto r : rows) {
    if (r >= rows_) throw Error(ErrorCode::kDimensionMismatch, "row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out.push_back((*this)(r, c));
  }
  return Matrix(field_, rows.size(), cols_, std::move(out));
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> c) const {
  if (c.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector has length " + std::to_string(c.size()) + ", expected " + std::to_string(cols_));
  }
  std::vector<Scalar> out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (c[j].is_zero()) continue;
      out[r] = field_.add(out[r], field_.mul((*this)(r, j), c[j]));
    }
  }
  return out;
}

}  // namespace matroidkit
