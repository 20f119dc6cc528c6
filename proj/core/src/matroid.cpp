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

#include "matroidkit/matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <string>
#include <type_traits>
#include <variant>

#include "matroidkit/axioms.hpp"
#include "matroidkit/errors.hpp"
#include "matroidkit/linalg.hpp"

namespace matroidkit {

namespace {

struct ExplicitData {
  std::vector<bool> member;
};

struct LinearData {
  Matrix matrix;
  std::vector<std::size_t> column_of_element;
};

struct GraphicData {
  MultiGraph graph;
};

}  // namespace

struct Matroid::Node {
  struct DualData {
    Matroid base;
  };
  struct MinorData {
    Matroid base;
    ElementSet contracted;
    ElementSet deleted;
    // Ascending and descending greedy bases of base restricted to contracted.
    ElementSet base_up;
    ElementSet base_down;
  };
  using Data = std::variant<ExplicitData, LinearData, GraphicData, DualData, MinorData>;

  Node(std::size_t n, ElementSet g, Data d) : universe(n), ground(g), data(std::move(d)) {}

  std::size_t universe;
  ElementSet ground;
  Data data;

  mutable std::once_flag rank_once;
  mutable std::vector<std::uint8_t> rank_table;
  mutable std::once_flag circuits_once;
  mutable std::vector<ElementSet> circuits;
  mutable std::once_flag cocircuits_once;
  mutable std::vector<ElementSet> cocircuits;
};

Matroid Matroid::from_family(const GroundSet& ground, std::span<const ElementSet> family) {
  const auto report = check_axioms(ground, family);
  if (!report.all_pass()) {
    throw Error(ErrorCode::kNotAMatroid, "family is not a matroid: " + report.describe_failure());
  }
  ExplicitData data{std::vector<bool>(std::size_t{1} << ground.size(), false)};
  for (auto s : family) data.member[s.mask()] = true;
  return Matroid(std::make_shared<const Node>(ground.size(), ground.all(), std::move(data)));
}

Matroid Matroid::uniform(std::size_t rank, std::size_t n) {
  std::vector<ElementSet> family;
  for_each_subset(ElementSet::full(n), [&](ElementSet s) {
    if (s.size() <= rank) family.push_back(s);
  });
  return from_family(GroundSet(n), family);
}

Matroid Matroid::from_matrix(Matrix m) {
  std::vector<std::size_t> identity(m.cols());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return from_matrix(std::move(m), std::move(identity));
}

Matroid Matroid::from_matrix(Matrix m, std::vector<std::size_t> column_of_element) {
  const auto n = column_of_element.size();
  if (n > kMaxGroundSize) throw Error(ErrorCode::kGroundTooLarge, "vector family has more than 32 columns");
  if (n != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "column map has " + std::to_string(n) + " entries for " +
                                                   std::to_string(m.cols()) + " columns");
  }
  std::vector<bool> used(n, false);
  for (auto c : column_of_element) {
    if (c >= n || used[c]) throw Error(ErrorCode::kDimensionMismatch, "column map is not a bijection");
    used[c] = true;
  }
  return Matroid(std::make_shared<const Node>(n, ElementSet::full(n),
                                              LinearData{std::move(m), std::move(column_of_element)}));
}

Matroid Matroid::from_graph(MultiGraph g) {
  const auto n = g.edge_count();
  if (n > kMaxGroundSize) throw Error(ErrorCode::kGroundTooLarge, "graph has more than 32 edges");
  return Matroid(std::make_shared<const Node>(n, ElementSet::full(n), GraphicData{std::move(g)}));
}

std::size_t Matroid::universe_size() const noexcept { return node_->universe; }
ElementSet Matroid::ground() const noexcept { return node_->ground; }

Backend Matroid::backend() const noexcept {
  return static_cast<Backend>(node_->data.index());
}

void Matroid::require_inside_ground(ElementSet x) const {
  if (!x.is_subset_of(node_->ground)) {
    throw Error(ErrorCode::kElementOutOfRange,
                "set " + x.to_braced_string() + " is not inside the ground set " + node_->ground.to_braced_string());
  }
}

bool Matroid::evaluate_independent(ElementSet x) const {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ExplicitData>) {
          return d.member[x.mask()];
        } else if constexpr (std::is_same_v<T, LinearData>) {
          std::vector<std::size_t> columns;
          for_each_element(x, [&](std::size_t e) { columns.push_back(d.column_of_element[e]); });
          return ::matroidkit::rank(d.matrix.select_columns(columns)) == columns.size();
        } else if constexpr (std::is_same_v<T, GraphicData>) {
          return is_forest(d.graph, x);
        } else if constexpr (std::is_same_v<T, Node::DualData>) {
          return d.base.rank(d.base.ground() - x) == d.base.rank();
        } else {
          const bool up = d.base.is_independent(x | d.base_up);
          const bool down = d.base.is_independent(x | d.base_down);
          if (up != down) {
            throw Error(ErrorCode::kInvariantViolation,
                        "contraction depends on the chosen base: " + x.to_braced_string() + " with bases " +
                            d.base_up.to_braced_string() + " and " + d.base_down.to_braced_string());
          }
          return up;
        }
      },
      node_->data);
}

bool Matroid::is_independent(ElementSet x) const {
  require_inside_ground(x);
  if (node_->universe <= kMaxTabulatedGround) return rank(x) == x.size();
  return evaluate_independent(x);
}

std::size_t Matroid::rank(ElementSet x) const {
  require_inside_ground(x);
  const auto& node = *node_;
  if (node.universe > kMaxTabulatedGround) return greedy_extend(ElementSet{}, x).size();

  std::call_once(node.rank_once, [&] {
    auto& table = node.rank_table;
    table.assign(std::size_t{1} << node.universe, 0);
    // Subsets are visited after all their one-smaller subsets, so a set whose
    // every X - y is independent is the only case needing an oracle call.
    for_each_subset(node.ground, [&](ElementSet s) {
      if (s.empty()) return;
      const auto k = static_cast<std::uint8_t>(s.size());
      std::uint8_t best = 0;
      bool subsets_independent = true;
      for_each_element(s, [&](std::size_t y) {
        const auto r = table[s.without(y).mask()];
        best = std::max(best, r);
        if (r + 1 < k) subsets_independent = false;
      });
      table[s.mask()] = (subsets_independent && evaluate_independent(s)) ? k : best;
    });
  });
  return node.rank_table[x.mask()];
}

ElementSet Matroid::greedy_extend(ElementSet start, ElementSet within, bool descending) const {
  auto elements = (within - start).elements();
  if (descending) std::reverse(elements.begin(), elements.end());
  auto current = start;
  for (auto e : elements) {
    const auto candidate = current.with(e);
    const bool independent = node_->universe <= kMaxTabulatedGround ? rank(candidate) == candidate.size()
                                                                    : evaluate_independent(candidate);
    if (independent) current = candidate;
  }
  return current;
}

Matroid Matroid::dual() const {
  return Matroid(std::make_shared<const Node>(node_->universe, node_->ground, Node::DualData{*this}));
}

Matroid Matroid::delete_elements(ElementSet d) const {
  require_inside_ground(d);
  if (d.empty()) return *this;
  return Matroid(std::make_shared<const Node>(node_->universe, node_->ground - d,
                                              Node::MinorData{*this, ElementSet{}, d, ElementSet{}, ElementSet{}}));
}

Matroid Matroid::contract(ElementSet c) const {
  require_inside_ground(c);
  if (c.empty()) return *this;
  const auto up = greedy_extend(ElementSet{}, c, false);
  const auto down = greedy_extend(ElementSet{}, c, true);
  return Matroid(std::make_shared<const Node>(node_->universe, node_->ground - c,
                                              Node::MinorData{*this, c, ElementSet{}, up, down}));
}

const std::vector<ElementSet>& Matroid::circuits() const {
  const auto& node = *node_;
  std::call_once(node.circuits_once, [&] {
    const auto elements = node.ground.elements();
    const auto limit = std::min(rank() + 1, elements.size());
    std::vector<ElementSet> found;
    // Layer k holds the k-subsets; a circuit has at most rank + 1 elements.
    for (std::size_t k = 1; k <= limit; ++k) {
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        ElementSet s;
        for (auto i : pick) s = s.with(elements[i]);
        if (rank(s) < s.size()) {
          bool minimal = true;
          for_each_element(s, [&](std::size_t y) {
            if (minimal && rank(s.without(y)) < k - 1) minimal = false;
          });
          if (minimal) found.push_back(s);
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == elements.size() - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    std::sort(found.begin(), found.end());
    node.circuits = std::move(found);
  });
  return node.circuits;
}

const std::vector<ElementSet>& Matroid::cocircuits() const {
  const auto& node = *node_;
  std::call_once(node.cocircuits_once, [&] { node.cocircuits = dual().circuits(); });
  return node.cocircuits;
}

std::vector<ElementSet> Matroid::bases() const {
  std::vector<ElementSet> out;
  const auto g = ground();
  for_each_subset(g, [&](ElementSet s) {
    if (rank(s) != s.size()) return;
    bool maximal = true;
    for_each_element(g - s, [&](std::size_t e) {
      if (maximal && rank(s.with(e)) == s.size() + 1) maximal = false;
    });
    if (maximal) out.push_back(s);
  });
  for (auto b : out) {
    if (b.size() != out.front().size()) {
      throw Error(ErrorCode::kInvariantViolation, "bases " + out.front().to_braced_string() + " and " +
                                                      b.to_braced_string() + " have different sizes");
    }
  }
  return out;
}

std::vector<ElementSet> Matroid::independent_sets() const {
  std::vector<ElementSet> out;
  for_each_subset(ground(), [&](ElementSet s) {
    if (is_independent(s)) out.push_back(s);
  });
  return out;
}

const Matrix* Matroid::matrix() const noexcept {
  const auto* d = std::get_if<LinearData>(&node_->data);
  return d ? &d->matrix : nullptr;
}

const MultiGraph* Matroid::graph() const noexcept {
  const auto* d = std::get_if<GraphicData>(&node_->data);
  return d ? &d->graph : nullptr;
}

const Matroid* Matroid::parent() const noexcept {
  if (const auto* d = std::get_if<Node::DualData>(&node_->data)) return &d->base;
  if (const auto* d = std::get_if<Node::MinorData>(&node_->data)) return &d->base;
  return nullptr;
}

ElementSet Matroid::contracted() const noexcept {
  const auto* d = std::get_if<Node::MinorData>(&node_->data);
  return d ? d->contracted : ElementSet{};
}

ElementSet Matroid::deleted() const noexcept {
  const auto* d = std::get_if<Node::MinorData>(&node_->data);
  return d ? d->deleted : ElementSet{};
}

std::optional<ElementSet> first_disagreement(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) return (a.ground() - b.ground()) | (b.ground() - a.ground());
  std::optional<ElementSet> found;
  for_each_subset(a.ground(), [&](ElementSet s) {
    if (!found && a.is_independent(s) != b.is_independent(s)) found = s;
  });
  return found;
}

bool same_independence(const Matroid& a, const Matroid& b) { return !first_disagreement(a, b).has_value(); }

}  // namespace matroidkit
