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

#ifndef MATROIDKIT_LINALG_HPP_
#define MATROIDKIT_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "matroidkit/matrix.hpp"

namespace matroidkit {

struct RowEchelon {
  Matrix reduced;
  /// Pivot columns, left to right.
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current pivot row; no other pivoting is done.
RowEchelon rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of {c : A c = 0}, one vector per free column in ascending column
/// order; the vector for free column j has a 1 at j and 0 at the other free
/// columns.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a);

/// Some c with A c = b, free variables set to zero, or nullopt when the
/// system is inconsistent. Throws kDimensionMismatch if b.size() != rows.
std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b);

}  // namespace matroidkit

#endif  // MATROIDKIT_LINALG_HPP_
