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

#ifndef MATROIDKIT_MATROID_HPP_
#define MATROIDKIT_MATROID_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "matroidkit/element_set.hpp"
#include "matroidkit/matrix.hpp"
#include "matroidkit/multigraph.hpp"

namespace matroidkit {

/// Largest universe for which rank values are tabulated on first use;
/// larger matroids evaluate their oracle directly on every query.
inline constexpr std::size_t kMaxTabulatedGround = 16;

enum class Backend { kExplicit, kLinear, kGraphic, kDual, kMinor };

/// A matroid on a finite ground set, given by an independence oracle.
///
/// Elements are indices 0..n-1 of a universe of size n. For matroids built
/// directly the ground set is the whole universe; minors keep the original
/// labels and have ground = universe minus the contracted and deleted
/// elements.
///
/// Values are immutable and cheap to copy (shared, reference-counted
/// state). Rank values and circuits are memoized internally behind
/// std::call_once, so concurrent queries are safe.
class Matroid {
 public:
  /// Explicit family of independent sets. Throws kNotAMatroid if the family
  /// fails any of the independence axioms.
  static Matroid from_family(const GroundSet& ground, std::span<const ElementSet> family);
  /// U_{rank,n} as an explicit family.
  static Matroid uniform(std::size_t rank, std::size_t n);

  /// Vector matroid on the columns of m; element e is column e.
  static Matroid from_matrix(Matrix m);
  /// Element e is column column_of_element[e] (must be a bijection).
  static Matroid from_matrix(Matrix m, std::vector<std::size_t> column_of_element);

  /// Cycle matroid; element e is edge e.
  static Matroid from_graph(MultiGraph g);

  std::size_t universe_size() const noexcept;
  ElementSet ground() const noexcept;
  Backend backend() const noexcept;

  /// Throws kElementOutOfRange unless x is inside ground().
  bool is_independent(ElementSet x) const;
  std::size_t rank(ElementSet x) const;
  std::size_t rank() const { return rank(ground()); }

  Matroid dual() const;
  /// M \ D. Throws kElementOutOfRange unless D is inside ground().
  Matroid delete_elements(ElementSet d) const;
  /// M / C. X is independent iff X + B_C is independent in M, where B_C is
  /// the ascending greedy base of M restricted to C. Every query is also
  /// evaluated with the descending greedy base; a disagreement throws
  /// kInvariantViolation.
  Matroid contract(ElementSet c) const;

  /// Minimal dependent sets in ascending mask order (memoized).
  const std::vector<ElementSet>& circuits() const;
  /// Circuits of the dual, ascending (memoized).
  const std::vector<ElementSet>& cocircuits() const;
  /// Maximal independent sets in ascending mask order. Throws
  /// kInvariantViolation if they do not all have the same size.
  std::vector<ElementSet> bases() const;
  /// Every independent subset of the ground set, ascending.
  std::vector<ElementSet> independent_sets() const;

  /// Greedy maximal independent subset of `within`, scanning elements in
  /// ascending (or descending) index order, starting from `start`.
  ElementSet greedy_extend(ElementSet start, ElementSet within, bool descending = false) const;

  /// Backend payloads; null when the backend differs.
  const Matrix* matrix() const noexcept;
  const MultiGraph* graph() const noexcept;
  /// The matroid a dual or minor was derived from.
  const Matroid* parent() const noexcept;
  /// For minors: the contracted and deleted sets relative to parent().
  ElementSet contracted() const noexcept;
  ElementSet deleted() const noexcept;

 private:
  struct Node;
  explicit Matroid(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  bool evaluate_independent(ElementSet x) const;
  void require_inside_ground(ElementSet x) const;

  std::shared_ptr<const Node> node_;
};

/// True iff both matroids have the same ground set and the same
/// independent sets.
bool same_independence(const Matroid& a, const Matroid& b);
/// The first subset (ascending mask) where the oracles differ; nullopt when
/// they agree. Differing ground sets report the symmetric difference.
std::optional<ElementSet> first_disagreement(const Matroid& a, const Matroid& b);

}  // namespace matroidkit

#endif  // MATROIDKIT_MATROID_HPP_
