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

#include "matroidkit/representation.hpp"

#include <string>

#include "matroidkit/axioms.hpp"
#include "matroidkit/errors.hpp"
#include "matroidkit/linalg.hpp"

namespace matroidkit {

VectorFamily::VectorFamily(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.cols() > kMaxGroundSize) throw Error(ErrorCode::kGroundTooLarge, "vector family has more than 32 columns");
}

VectorFamily VectorFamily::restrict_to(ElementSet elements) const {
  std::vector<Scalar> entries(matrix_.entries().begin(), matrix_.entries().end());
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      if (!elements.contains(c)) entries[r * matrix_.cols() + c] = field().zero();
    }
  }
  return VectorFamily(Matrix(field(), matrix_.rows(), matrix_.cols(), std::move(entries)));
}

ElementSet support(const DependenceVector& c) {
  ElementSet out;
  for (std::size_t e = 0; e < c.coefficients.size(); ++e) {
    if (!c.coefficients[e].is_zero()) out = out.with(e);
  }
  return out;
}

ThinProfile is_thin_family(const VectorFamily& f) {
  ThinProfile out;
  for (std::size_t a = 0; a < f.coordinate_count(); ++a) {
    std::size_t count = 0;
    for (std::size_t e = 0; e < f.ground_size(); ++e) {
      if (!f.value(e, a).is_zero()) ++count;
    }
    out.max_row_support = std::max(out.max_row_support, count);
  }
  // Each coordinate sees at most ground_size() nonzero entries.
  out.thin = out.max_row_support <= f.ground_size();
  return out;
}

Matroid vector_matroid(const VectorFamily& phi) { return Matroid::from_matrix(phi.matrix()); }

bool is_thin_dependence(const VectorFamily& f, const DependenceVector& c) {
  if (c.coefficients.size() != f.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch, "coefficient map has " + std::to_string(c.coefficients.size()) +
                                                   " entries for " + std::to_string(f.ground_size()) + " elements");
  }
  const auto& field = f.field();
  for (std::size_t a = 0; a < f.coordinate_count(); ++a) {
    auto sum = field.zero();
    for (std::size_t e = 0; e < f.ground_size(); ++e) {
      if (c.coefficients[e].is_zero()) continue;
      sum = field.add(sum, field.mul(c.coefficients[e], f.value(e, a)));
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

std::optional<DependenceVector> find_thin_dependence(const VectorFamily& f, ElementSet x) {
  const auto& field = f.field();
  const auto elements = x.elements();
  if (elements.empty()) return std::nullopt;

  // One equation per coordinate a touched by x: sum_e c(e) f(e)(a) = 0.
  std::vector<Scalar> equations;
  std::size_t rows = 0;
  for (std::size_t a = 0; a < f.coordinate_count(); ++a) {
    bool touched = false;
    for (auto e : elements) touched = touched || !f.value(e, a).is_zero();
    if (!touched) continue;
    for (auto e : elements) equations.push_back(f.value(e, a));
    ++rows;
  }
  const Matrix system(field, rows, elements.size(), std::move(equations));
  const auto solutions = kernel_basis(system);
  if (solutions.empty()) return std::nullopt;

  DependenceVector c{field, std::vector<Scalar>(f.ground_size(), field.zero())};
  for (std::size_t i = 0; i < elements.size(); ++i) c.coefficients[elements[i]] = solutions.front()[i];
  if (!is_thin_dependence(f, c)) {
    throw Error(ErrorCode::kInvariantViolation, "kernel vector fails a coordinate sum on " + x.to_braced_string());
  }
  return c;
}

std::vector<ElementSet> thin_sums_family(const VectorFamily& f) {
  if (f.ground_size() > kMaxEnumerableGround) {
    throw Error(ErrorCode::kGroundTooLarge, "thin sums enumeration needs at most 20 elements");
  }
  std::vector<ElementSet> family;
  std::vector<bool> dependent(std::size_t{1} << f.ground_size(), false);
  for_each_subset(ElementSet::full(f.ground_size()), [&](ElementSet x) {
    // Supersets of a dependent set are dependent.
    bool known = false;
    for_each_element(x, [&](std::size_t e) { known = known || dependent[x.without(e).mask()]; });
    dependent[x.mask()] = known || find_thin_dependence(f, x).has_value();
    if (!dependent[x.mask()]) family.push_back(x);
  });
  return family;
}

Matroid thin_sums_system(const VectorFamily& f) {
  return Matroid::from_family(GroundSet(f.ground_size()), thin_sums_family(f));
}

VectorFamily dual_representation(const VectorFamily& phi) {
  const auto& field = phi.field();
  const auto n = phi.ground_size();
  const auto echelon = rref(phi.matrix());
  std::vector<bool> is_pivot(n, false);
  for (auto c : echelon.pivot_columns) is_pivot[c] = true;

  std::vector<Scalar> entries;
  std::size_t rows = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> row(n, field.zero());
    row[j] = field.one();
    for (std::size_t i = 0; i < echelon.pivot_columns.size(); ++i) {
      row[echelon.pivot_columns[i]] = field.neg(echelon.reduced(i, j));
    }
    entries.insert(entries.end(), row.begin(), row.end());
    ++rows;
  }
  return VectorFamily(Matrix(field, rows, n, std::move(entries)));
}

TsDualityReport verify_ts_duality(const VectorFamily& f) {
  TsDualityReport report;
  const auto psi = dual_representation(f);
  const auto ts_f = thin_sums_system(f);
  const auto dual_of_psi = vector_matroid(psi).dual();
  const auto ts_psi = thin_sums_system(psi);
  const auto dual_of_f = vector_matroid(f).dual();

  for_each_subset(ElementSet::full(f.ground_size()), [&](ElementSet x) {
    ++report.subsets_compared;
    if (report.forward && ts_f.is_independent(x) != dual_of_psi.is_independent(x)) {
      report.forward = false;
      report.forward_mismatch = x;
    }
    if (report.backward && ts_psi.is_independent(x) != dual_of_f.is_independent(x)) {
      report.backward = false;
      report.backward_mismatch = x;
    }
  });
  return report;
}

std::vector<ElementSet> circuits_from_kernel(const VectorFamily& f) {
  std::vector<ElementSet> out;
  for_each_subset(ElementSet::full(f.ground_size()), [&](ElementSet x) {
    if (x.empty()) return;
    const auto columns = x.elements();
    const auto kernel = kernel_basis(f.matrix().select_columns(columns));
    if (kernel.size() != 1) return;
    bool full_support = true;
    for (const auto& v : kernel.front()) full_support = full_support && !v.is_zero();
    if (full_support) out.push_back(x);
  });
  return out;
}

}  // namespace matroidkit
