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

#include "matroidkit/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "matroidkit/errors.hpp"

namespace matroidkit {

MultiGraph::MultiGraph(std::size_t vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.id != i) {
      throw Error(ErrorCode::kInvalidGraph, "edge ids must be distinct and contiguous from 0; missing id " +
                                                std::to_string(i));
    }
    if (e.u >= vertices_ || e.v >= vertices_) {
      throw Error(ErrorCode::kInvalidGraph, "edge " + std::to_string(e.id) + " has an endpoint outside 0.." +
                                                std::to_string(vertices_) + "-1");
    }
  }
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --sets_;
  return true;
}

bool is_forest(const MultiGraph& g, ElementSet edges) {
  DisjointSets sets(g.vertex_count());
  bool forest = true;
  for_each_element(edges, [&](std::size_t id) {
    const auto& e = g.edge(id);
    if (forest && !sets.unite(e.u, e.v)) forest = false;
  });
  return forest;
}

std::size_t component_count(const MultiGraph& g, ElementSet edges) {
  std::vector<std::vector<std::size_t>> adjacent(g.vertex_count());
  for_each_element(edges, [&](std::size_t id) {
    const auto& e = g.edge(id);
    adjacent[e.u].push_back(e.v);
    adjacent[e.v].push_back(e.u);
  });
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t components = 0;
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    ++components;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const auto v = frontier.front();
      frontier.pop();
      for (auto w : adjacent[v]) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
  }
  return components;
}

}  // namespace matroidkit
