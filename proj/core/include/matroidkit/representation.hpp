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

#ifndef MATROIDKIT_REPRESENTATION_HPP_
#define MATROIDKIT_REPRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "matroidkit/element_set.hpp"
#include "matroidkit/field.hpp"
#include "matroidkit/matrix.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// A family E -> k^A: column e of the matrix is the vector f(e), and the
/// rows are the coordinates a in A.
class VectorFamily {
 public:
  /// Throws kGroundTooLarge above 32 columns.
  explicit VectorFamily(Matrix matrix);

  const Field& field() const noexcept { return matrix_.field(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t ground_size() const noexcept { return matrix_.cols(); }
  std::size_t coordinate_count() const noexcept { return matrix_.rows(); }
  const Scalar& value(std::size_t element, std::size_t coordinate) const { return matrix_(coordinate, element); }

  /// The family restricted to `elements`; other columns become zero so
  /// element indices are unchanged.
  VectorFamily restrict_to(ElementSet elements) const;

 private:
  Matrix matrix_;
};

/// A coefficient map c: E -> k.
struct DependenceVector {
  Field field;
  std::vector<Scalar> coefficients;
};

ElementSet support(const DependenceVector& c);

struct ThinProfile {
  bool thin = true;
  /// max over coordinates a of |{e : f(e)(a) != 0}|.
  std::size_t max_row_support = 0;
};
ThinProfile is_thin_family(const VectorFamily& f);

/// M(phi): X is independent iff the columns in X have no nonzero linear
/// dependence, i.e. the column submatrix has full column rank.
Matroid vector_matroid(const VectorFamily& phi);

/// Sum of c(e) f(e)(a) over e is zero for every coordinate a, evaluated
/// coordinate by coordinate. Throws kDimensionMismatch on a length mismatch.
bool is_thin_dependence(const VectorFamily& f, const DependenceVector& c);

/// A nonzero thin dependence supported inside `x`, or nullopt. Only the
/// coordinates some element of x touches contribute equations; a candidate
/// is re-checked pointwise before it is returned.
std::optional<DependenceVector> find_thin_dependence(const VectorFamily& f, ElementSet x);

/// Independent sets of the thin sums system M_ts(f), ascending.
std::vector<ElementSet> thin_sums_family(const VectorFamily& f);
/// M_ts(f) as an explicit matroid. Throws kNotAMatroid if the system fails
/// the axioms (impossible for finite families).
Matroid thin_sums_system(const VectorFamily& f);

/// psi with M(psi) = M(phi)*. phi is row-reduced; with pivot columns B (the
/// lexicographically least base) and free columns E - B, psi has one row per
/// free column j: 1 at j and -R[i][j] at the i-th pivot column.
VectorFamily dual_representation(const VectorFamily& phi);

struct TsDualityReport {
  /// M_ts(f) against dual(M(dual_representation(f))).
  bool forward = true;
  std::optional<ElementSet> forward_mismatch;
  /// M_ts(dual_representation(f)) against dual(M(f)).
  bool backward = true;
  std::optional<ElementSet> backward_mismatch;
  std::size_t subsets_compared = 0;

  bool pass() const noexcept { return forward && backward; }
};

/// Exhaustive check, on every subset, that thin sums matroids over this
/// family and duals of vector matroids coincide in both directions.
TsDualityReport verify_ts_duality(const VectorFamily& f);

/// Circuits of M(f) read off the kernel: X is a circuit iff the kernel of
/// the column submatrix on X is one-dimensional and its generator has
/// support exactly X.
std::vector<ElementSet> circuits_from_kernel(const VectorFamily& f);

}  // namespace matroidkit

#endif  // MATROIDKIT_REPRESENTATION_HPP_
