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

#ifndef MATROIDKIT_AXIOMS_HPP_
#define MATROIDKIT_AXIOMS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matroidkit/element_set.hpp"

namespace matroidkit {

/// Largest ground set on which a set family can be checked exhaustively.
inline constexpr std::size_t kMaxEnumerableGround = 20;

struct AxiomCheck {
  bool pass = true;
  // On failure: i1 -> (empty set); i2 -> (member, missing subset);
  // i3 -> (non-maximal I, maximal I'); im -> (I, X).
  std::optional<ElementSet> first;
  std::optional<ElementSet> second;

  std::string witness() const;
};

struct AxiomReport {
  AxiomCheck i1;
  AxiomCheck i2;
  AxiomCheck i3;
  AxiomCheck im;

  bool all_pass() const noexcept { return i1.pass && i2.pass && i3.pass && im.pass; }
  /// First failing axiom as "I1: ..." text, empty when all pass.
  std::string describe_failure() const;
};

/// Checks (I1), (I2), (I3) and (IM) on an explicit family of subsets.
/// (IM) is checked by searching each interval {I' : I <= I' <= X} for a
/// maximal member; on a finite ground set it cannot fail, but the search
/// runs anyway. Each failing axiom reports the first witness in ascending
/// mask order.
///
/// Throws kElementOutOfRange if a set is not inside the ground set and
/// kGroundTooLarge above kMaxEnumerableGround elements.
AxiomReport check_axioms(const GroundSet& ground, std::span<const ElementSet> family);

}  // namespace matroidkit

#endif  // MATROIDKIT_AXIOMS_HPP_
