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

#ifndef MATROIDKIT_CLI_CORPUS_HPP_
#define MATROIDKIT_CLI_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "matroidkit/field.hpp"
#include "matroidkit/matrix.hpp"
#include "matroidkit/multigraph.hpp"
#include "matroidkit/representation.hpp"

namespace matroidkit::cli {

/// 64-bit linear congruential generator; each draw advances the state and
/// returns its top 32 bits. The constants are part of the corpus format, so
/// corpora are reproducible across implementations.
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint32_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  /// next() % bound; bound must be positive.
  std::uint32_t below(std::uint32_t bound) noexcept { return next() % bound; }
  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

enum class Generator {
  kExplicitUniform,
  kRandomMatrixGf2,
  kRandomMatrixGf3,
  kRandomMatrixGf5,
  kRandomMatrixQ,
  kRandomGraph,
};

std::string to_string(Generator g);

inline constexpr std::size_t kMaxCorpusGround = 10;

struct CorpusSpec {
  std::uint64_t seed = 1;
  /// Number of random instances, dealt round-robin over the random
  /// generators in the order listed.
  std::size_t count = 1;
  std::size_t max_ground = 8;
  std::vector<Generator> generators;

  /// Throws Error(kInvalidArgument) unless count >= 1, 1 <= max_ground <= 10
  /// and at least one generator is selected.
  void validate() const;
};

struct UniformInstance {
  std::size_t rank;
  std::size_t size;
};

struct Instance {
  std::string id;
  std::variant<UniformInstance, VectorFamily, MultiGraph> payload;
};

/// Entries drawn row-major: GF(p) entries as below(p); rational entries as
/// (below(7) - 3) / (1 + below(3)).
Matrix random_matrix(Lcg& rng, const Field& field, std::size_t rows, std::size_t cols);

/// Endpoints drawn as below(vertices) for u then v, edge by edge. Loops and
/// parallel edges arise naturally.
MultiGraph random_graph(Lcg& rng, std::size_t vertices, std::size_t edges);

/// Hand-built graphs always present when random graphs are requested:
/// a triangle, a loop with a parallel pair, K4 and a theta graph; only those
/// with at most max_ground edges are returned.
std::vector<Instance> fixed_graphs(std::size_t max_ground);

/// Deterministic in the spec. Order: every U_{r,n} with n <= max_ground
/// (explicit-uniform), the fixed graphs (random-graph), then `count` random
/// instances from one Lcg(seed) stream. A random matrix draws
/// cols = 1 + below(max_ground), rows = 1 + below(4), then its entries; a
/// random graph draws edges = 1 + below(max_ground), vertices = 1 + below(5),
/// then its edges.
std::vector<Instance> generate_corpus(const CorpusSpec& spec);

}  // namespace matroidkit::cli

#endif  // MATROIDKIT_CLI_CORPUS_HPP_
