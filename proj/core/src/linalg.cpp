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

#include "matroidkit/linalg.hpp"

#include <string>
#include <utility>

#include "matroidkit/errors.hpp"

namespace matroidkit {

namespace {

// In-place reduction of a row-major grid; returns pivot columns. Only the
// first `pivot_limit` columns are eligible as pivots.
std::vector<std::size_t> reduce(const Field& field, std::size_t rows, std::size_t cols,
                                std::vector<Scalar>& grid, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  const auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return grid[r * cols + c]; };
  for (std::size_t c = 0; c < pivot_limit && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && at(r, c).is_zero()) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(pivot_row, j));
    }
    const auto scale = field.inv(at(pivot_row, c));
    for (std::size_t j = c; j < cols; ++j) at(pivot_row, j) = field.mul(at(pivot_row, j), scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || at(i, c).is_zero()) continue;
      const auto factor = at(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (at(pivot_row, j).is_zero()) continue;
        at(i, j) = field.sub(at(i, j), field.mul(factor, at(pivot_row, j)));
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(const Matrix& a) {
  std::vector<Scalar> grid(a.entries().begin(), a.entries().end());
  auto pivots = reduce(a.field(), a.rows(), a.cols(), grid, a.cols());
  return RowEchelon{Matrix(a.field(), a.rows(), a.cols(), std::move(grid)), std::move(pivots)};
}

std::size_t rank(const Matrix& a) {
  std::vector<Scalar> grid(a.entries().begin(), a.entries().end());
  return reduce(a.field(), a.rows(), a.cols(), grid, a.cols()).size();
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a) {
  const auto echelon = rref(a);
  const auto& field = a.field();
  const auto& r = echelon.reduced;
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : echelon.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(a.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < echelon.pivot_columns.size(); ++i) {
      v[echelon.pivot_columns[i]] = field.neg(r(i, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "right-hand side has length " + std::to_string(b.size()) + ", expected " +
                    std::to_string(a.rows()));
  }
  const auto& field = a.field();
  const auto cols = a.cols() + 1;
  std::vector<Scalar> grid;
  grid.reserve(a.rows() * cols);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) grid.push_back(a(r, c));
    if (!field.contains(b[r])) throw Error(ErrorCode::kFieldMismatch, "right-hand side outside field");
    grid.push_back(b[r]);
  }
  const auto pivots = reduce(field, a.rows(), cols, grid, a.cols());
  // A nonzero right-hand entry in a zero row means no solution.
  for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
    if (!grid[r * cols + a.cols()].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(a.cols(), field.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = grid[i * cols + a.cols()];
  return x;
}

}  // namespace matroidkit
