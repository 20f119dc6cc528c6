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

#include "matroidkit/structure.hpp"

#include <algorithm>
#include <string>

#include "matroidkit/errors.hpp"

namespace matroidkit {

bool is_base(const Matroid& m, ElementSet b) {
  return b.is_subset_of(m.ground()) && m.is_independent(b) && b.size() == m.rank();
}

bool is_circuit(const Matroid& m, ElementSet o) {
  if (o.empty() || !o.is_subset_of(m.ground()) || m.is_independent(o)) return false;
  bool minimal = true;
  for_each_element(o, [&](std::size_t y) {
    if (minimal && !m.is_independent(o.without(y))) minimal = false;
  });
  return minimal;
}

ElementSet fundamental_circuit(const Matroid& m, ElementSet base, std::size_t e) {
  if (!is_base(m, base)) throw Error(ErrorCode::kNotABase, base.to_braced_string() + " is not a base");
  if (!m.ground().contains(e)) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(e) + " is not in the ground set");
  }
  if (base.contains(e)) {
    throw Error(ErrorCode::kElementInBase, "element " + std::to_string(e) + " lies in the base");
  }
  const auto extended = base.with(e);
  auto circuit = ElementSet::singleton(e);
  for_each_element(base, [&](std::size_t b) {
    if (m.is_independent(extended.without(b))) circuit = circuit.with(b);
  });
  if (!is_circuit(m, circuit)) {
    throw Error(ErrorCode::kInvariantViolation,
                "fundamental circuit candidate " + circuit.to_braced_string() + " is not a circuit");
  }
  return circuit;
}

ElementSet fundamental_cocircuit(const Matroid& m, ElementSet base, std::size_t f) {
  if (!is_base(m, base)) throw Error(ErrorCode::kNotABase, base.to_braced_string() + " is not a base");
  if (!base.contains(f)) {
    throw Error(ErrorCode::kElementNotInBase, "element " + std::to_string(f) + " is not in the base");
  }
  return fundamental_circuit(m.dual(), m.ground() - base, f);
}

ElementSet cocircuit_through_pair(const Matroid& m, ElementSet circuit, std::size_t e, std::size_t f) {
  if (!is_circuit(m, circuit)) throw Error(ErrorCode::kNotACircuit, circuit.to_braced_string() + " is not a circuit");
  if (e == f || !circuit.contains(e) || !circuit.contains(f)) {
    throw Error(ErrorCode::kElementsNotInCircuit, "need two distinct elements of " + circuit.to_braced_string());
  }
  const auto base = m.greedy_extend(circuit.without(e), m.ground());
  return fundamental_cocircuit(m, base, f);
}

ElementSet lift_circuit(const Matroid& m, ElementSet contracted, ElementSet deleted, ElementSet minor_circuit) {
  const auto g = m.ground();
  if (!contracted.is_subset_of(g) || !deleted.is_subset_of(g) || !(contracted & deleted).empty() ||
      !minor_circuit.is_subset_of(g - contracted - deleted)) {
    throw Error(ErrorCode::kNotAMinorCircuit, "contracted, deleted and circuit sets must be disjoint parts of the ground set");
  }
  const auto minor = m.contract(contracted).delete_elements(deleted);
  if (!is_circuit(minor, minor_circuit)) {
    throw Error(ErrorCode::kNotAMinorCircuit, minor_circuit.to_braced_string() + " is not a circuit of the minor");
  }
  const auto base = m.greedy_extend(ElementSet{}, contracted);
  auto candidate = base | minor_circuit;
  for_each_element(candidate, [&](std::size_t y) {
    if (!m.is_independent(candidate.without(y))) candidate = candidate.without(y);
  });
  if (!minor_circuit.is_subset_of(candidate)) {
    throw Error(ErrorCode::kInvariantViolation, "lifted circuit " + candidate.to_braced_string() + " misses part of " +
                                                    minor_circuit.to_braced_string());
  }
  return candidate;
}

PositionWitnesses find_position_witnesses(const Matroid& m, ElementSet c, std::size_t x, ElementSet d) {
  const auto g = m.ground();
  if (!g.contains(x) || c.contains(x) || d.contains(x) || !(c & d).empty() || (c | d).with(x) != g) {
    throw Error(ErrorCode::kNotAPartition, "C=" + c.to_braced_string() + ", x=" + std::to_string(x) +
                                               ", D=" + d.to_braced_string() + " do not partition the ground set");
  }
  PositionWitnesses out;
  for (auto o : m.circuits()) {
    if (o.contains(x) && o.is_subset_of(c.with(x))) {
      out.circuit = o;
      break;
    }
  }
  for (auto b : m.cocircuits()) {
    if (b.contains(x) && b.is_subset_of(d.with(x))) {
      out.cocircuit = b;
      break;
    }
  }
  return out;
}

Position position(const Matroid& m, ElementSet c, std::size_t x, ElementSet d) {
  const auto found = find_position_witnesses(m, c, x, d);
  if (found.circuit.has_value() == found.cocircuit.has_value()) {
    throw Error(ErrorCode::kInvariantViolation,
                std::string(found.circuit ? "both a circuit and a cocircuit" : "neither a circuit nor a cocircuit") +
                    " witness element " + std::to_string(x));
  }
  if (found.circuit) return {Position::Side::kCircuit, *found.circuit};
  return {Position::Side::kCocircuit, *found.cocircuit};
}

Tameness tameness(const Matroid& m) {
  Tameness out;
  const auto& circuits = m.circuits();
  const auto& cocircuits = m.cocircuits();
  for (auto o : circuits) {
    for (auto b : cocircuits) out.max_intersection = std::max(out.max_intersection, (o & b).size());
  }
  // Every intersection lies inside a finite ground set.
  out.all_finite = m.ground().size() <= kMaxGroundSize;
  return out;
}

}  // namespace matroidkit
