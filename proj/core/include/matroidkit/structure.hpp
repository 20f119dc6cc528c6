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

#ifndef MATROIDKIT_STRUCTURE_HPP_
#define MATROIDKIT_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "matroidkit/element_set.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

inline const std::vector<ElementSet>& circuits(const Matroid& m) { return m.circuits(); }
inline std::vector<ElementSet> bases(const Matroid& m) { return m.bases(); }
inline const std::vector<ElementSet>& cocircuits(const Matroid& m) { return m.cocircuits(); }

inline Matroid dual(const Matroid& m) { return m.dual(); }
inline Matroid delete_elements(const Matroid& m, ElementSet d) { return m.delete_elements(d); }
inline Matroid contract(const Matroid& m, ElementSet c) { return m.contract(c); }

bool is_base(const Matroid& m, ElementSet b);
bool is_circuit(const Matroid& m, ElementSet o);

/// The unique circuit o_e with e in o_e inside B + e.
/// Throws kNotABase or kElementInBase.
ElementSet fundamental_circuit(const Matroid& m, ElementSet base, std::size_t e);

/// The unique cocircuit b_f with f in b_f inside (E - B) + f, computed as the
/// fundamental circuit of f in the dual with respect to E - B.
/// Throws kNotABase or kElementNotInBase.
ElementSet fundamental_cocircuit(const Matroid& m, ElementSet base, std::size_t f);

/// A cocircuit b with o & b == {e, f}: extend o - e greedily (ascending) to a
/// base B, so o is the fundamental circuit of e, and return the fundamental
/// cocircuit of f. Throws kNotACircuit or kElementsNotInCircuit.
ElementSet cocircuit_through_pair(const Matroid& m, ElementSet circuit, std::size_t e, std::size_t f);

/// Given a circuit of M / C \ D, an M-circuit o with o' <= o <= o' + C. Found
/// as a minimal dependent subset of B + o', B the greedy base of M
/// restricted to C. Throws kNotAMinorCircuit when C, D and o' do not fit
/// together or o' is not a circuit of the minor, and kInvariantViolation if
/// the circuit found misses part of o'.
ElementSet lift_circuit(const Matroid& m, ElementSet contracted, ElementSet deleted, ElementSet minor_circuit);

struct Position {
  enum class Side { kCircuit, kCocircuit };
  Side side;
  ElementSet witness;
};

/// Both possible witnesses for a partition E = C + x + D: the first circuit
/// (ascending mask) with x in o inside C + x and the first cocircuit with x
/// in b inside D + x. Throws kNotAPartition.
struct PositionWitnesses {
  std::optional<ElementSet> circuit;
  std::optional<ElementSet> cocircuit;
};
PositionWitnesses find_position_witnesses(const Matroid& m, ElementSet c, std::size_t x, ElementSet d);

/// The side that exists. Both circuit lists are searched; if both or neither
/// witness exists, throws kInvariantViolation.
Position position(const Matroid& m, ElementSet c, std::size_t x, ElementSet d);

struct Tameness {
  /// Largest |o & b| over circuits o and cocircuits b; 0 with none.
  std::size_t max_intersection = 0;
  /// Every circuit-cocircuit intersection is finite; evaluated, not assumed.
  bool all_finite = true;
};
Tameness tameness(const Matroid& m);

}  // namespace matroidkit

#endif  // MATROIDKIT_STRUCTURE_HPP_
