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

#include "matroidkit/graphic.hpp"

#include <algorithm>

#include "matroidkit/axioms.hpp"
#include "matroidkit/errors.hpp"

namespace matroidkit {

Matroid cycle_matroid(const MultiGraph& g) { return Matroid::from_graph(g); }

Matroid bond_matroid(const MultiGraph& g) { return cycle_matroid(g).dual(); }

VectorFamily signed_incidence(const MultiGraph& g, const Field& field) {
  Matrix zero(field, g.vertex_count(), g.edge_count());
  std::vector<Scalar> entries(zero.entries().begin(), zero.entries().end());
  const auto cols = g.edge_count();
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const auto low = std::min(e.u, e.v);
    const auto high = std::max(e.u, e.v);
    entries[low * cols + e.id] = field.one();
    entries[high * cols + e.id] = field.neg(field.one());
  }
  return VectorFamily(Matrix(field, g.vertex_count(), cols, std::move(entries)));
}

std::vector<ElementSet> minimal_edge_cuts(const MultiGraph& g) {
  if (g.edge_count() > kMaxEnumerableGround) {
    throw Error(ErrorCode::kGroundTooLarge, "cut enumeration needs at most 20 edges");
  }
  const auto all = g.all_edges();
  const auto base_components = component_count(g, all);
  std::vector<ElementSet> cuts;
  for_each_subset(all, [&](ElementSet removed) {
    if (!removed.empty() && component_count(g, all - removed) > base_components) cuts.push_back(removed);
  });
  std::vector<ElementSet> minimal;
  for (auto c : cuts) {
    const bool has_smaller = std::any_of(cuts.begin(), cuts.end(), [&](ElementSet d) {
      return d != c && d.is_subset_of(c);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  return minimal;
}

GraphicReport verify_graphic_representable(const MultiGraph& g, const Field& field) {
  if (g.edge_count() > 16) throw Error(ErrorCode::kGroundTooLarge, "graphic check needs at most 16 edges");
  GraphicReport report;
  const auto graphic = cycle_matroid(g);
  const auto linear = vector_matroid(signed_incidence(g, field));
  for_each_subset(g.all_edges(), [&](ElementSet x) {
    ++report.subsets_compared;
    if (report.pass && graphic.is_independent(x) != linear.is_independent(x)) {
      report.pass = false;
      report.mismatch = x;
    }
  });
  return report;
}

}  // namespace matroidkit
