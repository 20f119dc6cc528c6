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

#ifndef MATROIDKIT_MULTIGRAPH_HPP_
#define MATROIDKIT_MULTIGRAPH_HPP_

#include <cstddef>
#include <vector>

#include "matroidkit/element_set.hpp"

namespace matroidkit {

struct Edge {
  std::size_t id;
  std::size_t u;
  std::size_t v;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multigraph; loops and parallel edges are allowed. Edges are kept
/// sorted by id, and ids run 0..m-1.
class MultiGraph {
 public:
  /// Throws kInvalidGraph if ids are not a permutation of 0..m-1 or an
  /// endpoint is not below `vertices`.
  MultiGraph(std::size_t vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertices_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }
  ElementSet all_edges() const { return ElementSet::full(edges_.size()); }

 private:
  std::size_t vertices_;
  std::vector<Edge> edges_;
};

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false when x and y were already in the same set.
  bool unite(std::size_t x, std::size_t y);
  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

/// True iff the edge subset contains no cycle (a loop is a 1-edge cycle and
/// two parallel edges form a 2-edge cycle).
bool is_forest(const MultiGraph& g, ElementSet edges);

/// Number of connected components of (V, edges), computed by breadth-first
/// search rather than union-find.
std::size_t component_count(const MultiGraph& g, ElementSet edges);

}  // namespace matroidkit

#endif  // MATROIDKIT_MULTIGRAPH_HPP_
