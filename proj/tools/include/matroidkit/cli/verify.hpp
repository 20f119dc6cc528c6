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

#ifndef MATROIDKIT_CLI_VERIFY_HPP_
#define MATROIDKIT_CLI_VERIFY_HPP_

#include <cstddef>
#include <string>

#include "matroidkit/cli/corpus.hpp"
#include "matroidkit/cli/report.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/multigraph.hpp"
#include "matroidkit/representation.hpp"

namespace matroidkit::cli {

/// Ground-size ceilings for the sweeps that enumerate bases, pairs or
/// minors. Instances above a ceiling skip that check (no line is emitted).
struct SuiteLimits {
  std::size_t fundamental = 7;   // fundamental-pair
  std::size_t circuit_pair = 7;  // cocircuit-through-pair
  std::size_t lift = 6;          // minor-circuit-lift
  std::size_t dichotomy = 7;     // circuit-cocircuit-dichotomy, minor-dual-identity
  std::size_t bond_cuts = 10;    // bond-cuts
};

// Each suite appends one line per check to `out`. A check that throws is
// reported as FAIL with the error text as its witness.

/// Axioms, bases, duality, the circuit/cocircuit lemmas, minors, the
/// operator calculus of Sp_M and tameness.
void verify_matroid(const std::string& id, const Matroid& m, Report& out, const SuiteLimits& limits = {});

/// Linear algebra sanity, thinness, thin sums collapse and both directions
/// of the thin-family duality, then verify_matroid on M(f).
void verify_vector_family(const std::string& id, const VectorFamily& f, Report& out,
                          const SuiteLimits& limits = {});

/// Graphic representability over GF(2), GF(3), GF(5) and Q, bonds against
/// minimal cuts, then verify_matroid on the cycle matroid.
void verify_graph(const std::string& id, const MultiGraph& g, Report& out, const SuiteLimits& limits = {});

/// U_{r,n} explicit family against a rational Vandermonde representation,
/// then verify_matroid.
void verify_uniform(const std::string& id, const UniformInstance& u, Report& out, const SuiteLimits& limits = {});

/// The three hand-built families that each break exactly one axiom.
void verify_axiom_negatives(Report& out);

/// Searches the 3-element ground set for an IE-operator that is not the
/// closure operator of any matroid.
void verify_non_matroidal_ie(Report& out);

Report verify_instance(const Instance& instance, const SuiteLimits& limits = {});

/// The global checks followed by every corpus instance in corpus order. The
/// 3-element operator search runs only when max_ground >= 3.
/// Instances are processed on `threads` workers; output order does not
/// depend on the thread count.
Report verify_all(const CorpusSpec& spec, unsigned threads = 1, const SuiteLimits& limits = {});

}  // namespace matroidkit::cli

#endif  // MATROIDKIT_CLI_VERIFY_HPP_
