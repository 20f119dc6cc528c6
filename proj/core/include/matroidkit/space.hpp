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

#ifndef MATROIDKIT_SPACE_HPP_
#define MATROIDKIT_SPACE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "matroidkit/element_set.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// Largest universe on which operator properties are checked exhaustively.
inline constexpr std::size_t kMaxOperatorGround = 16;

/// A space: a monotone, extensive operator on the subsets of a finite ground
/// set. Backed by an explicit table, by the closure operator of a matroid,
/// or by the dual construction applied to another operator.
///
/// Table-backed operators are validated when built. Matroid- and
/// dual-backed operators are evaluated lazily; on universes up to
/// kMaxOperatorGround the first evaluation materializes the full table
/// (validated too) and later evaluations are lookups.
class SpaceOperator {
 public:
  /// `table[mask]` is the image of the subset with that mask, for all 2^n
  /// masks. Throws kNotASpace if not extensive or not monotone and
  /// kGroundTooLarge above kMaxOperatorGround.
  static SpaceOperator from_table(std::size_t n, std::vector<ElementSet> table);
  /// The closure operator Sp_M on ground(M).
  static SpaceOperator closure_of(const Matroid& m);

  std::size_t universe_size() const noexcept;
  ElementSet ground() const noexcept;

  /// Throws kElementOutOfRange unless x is inside ground().
  ElementSet operator()(ElementSet x) const;

  /// X -> X + {x : x not in S(E - (X + x))}.
  SpaceOperator dual() const;

  /// Full table indexed by mask (entries outside the ground set are empty).
  /// Throws kGroundTooLarge above kMaxOperatorGround.
  const std::vector<ElementSet>& table() const;

 private:
  struct Node;
  explicit SpaceOperator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  ElementSet evaluate(ElementSet x) const;

  std::shared_ptr<const Node> node_;
};

/// X + {x : some circuit o has x in o inside X + x}.
ElementSet span(const Matroid& m, ElementSet x);

inline SpaceOperator dual_operator(const SpaceOperator& s) { return s.dual(); }

/// Extensional equality on every subset of the (shared) ground set.
bool same_operator(const SpaceOperator& a, const SpaceOperator& b);

/// S(S(X)) == S(X) for all X. Throws kGroundTooLarge above 16 elements.
bool is_idempotent(const SpaceOperator& s);
/// The dual operator is idempotent.
bool is_exchange(const SpaceOperator& s);
bool is_ie(const SpaceOperator& s);

/// A partition E = X + {x} + Y on which x in S(X) <=> x not in S*(Y) fails.
struct DaggerViolation {
  ElementSet x_side;
  std::size_t element;
  ElementSet y_side;
};
/// Checks the biconditional on every partition of the ground set.
std::optional<DaggerViolation> find_dagger_violation(const SpaceOperator& s, const SpaceOperator& s_dual);

struct NonMatroidalIeSearch {
  std::size_t spaces_examined = 0;
  std::size_t ie_operators = 0;
  std::size_t matroids = 0;
  /// IE-operator tables equal to Sp_M for no matroid M on the same ground set.
  std::vector<std::vector<ElementSet>> non_matroidal;
};

/// Enumerates every extensive monotone operator on {0..n-1} and every
/// matroid on {0..n-1} (as explicit independence families), and reports
/// the IE-operators that are not a matroid closure. Throws kGroundTooLarge
/// for n > 3.
NonMatroidalIeSearch search_non_matroidal_ie(std::size_t n);

}  // namespace matroidkit

#endif  // MATROIDKIT_SPACE_HPP_
