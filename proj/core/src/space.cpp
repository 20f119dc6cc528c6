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

#include "matroidkit/space.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>
#include <variant>

#include "matroidkit/axioms.hpp"
#include "matroidkit/errors.hpp"

namespace matroidkit {

namespace {

void validate_space(std::size_t n, ElementSet ground, const std::vector<ElementSet>& table) {
  for_each_subset(ground, [&](ElementSet x) {
    const auto image = table[x.mask()];
    if (!x.is_subset_of(image) || !image.is_subset_of(ground)) {
      throw Error(ErrorCode::kNotASpace, "operator is not extensive at " + x.to_braced_string());
    }
    // Monotone along single-element steps implies monotone everywhere.
    for_each_element(ground - x, [&](std::size_t e) {
      if (!image.is_subset_of(table[x.with(e).mask()])) {
        throw Error(ErrorCode::kNotASpace, "operator is not monotone at " + x.to_braced_string() + " + " +
                                               std::to_string(e));
      }
    });
  });
  (void)n;
}

void require_enumerable(std::size_t n) {
  if (n > kMaxOperatorGround) {
    throw Error(ErrorCode::kGroundTooLarge, "operator checks need a ground set of at most 16 elements");
  }
}

}  // namespace

struct SpaceOperator::Node {
  struct MatroidBacked {
    Matroid matroid;
  };
  struct DualBacked {
    SpaceOperator base;
  };
  using Data = std::variant<std::monostate, MatroidBacked, DualBacked>;

  Node(std::size_t n, ElementSet g, Data d) : universe(n), ground(g), data(std::move(d)) {}

  std::size_t universe;
  ElementSet ground;
  Data data;

  mutable std::once_flag table_once;
  mutable std::vector<ElementSet> table;
};

SpaceOperator SpaceOperator::from_table(std::size_t n, std::vector<ElementSet> table) {
  require_enumerable(n);
  if (table.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kNotASpace, "operator table has " + std::to_string(table.size()) + " entries, expected " +
                                           std::to_string(std::size_t{1} << n));
  }
  const auto ground = ElementSet::full(n);
  validate_space(n, ground, table);
  auto node = std::make_shared<Node>(n, ground, std::monostate{});
  node->table = std::move(table);
  std::call_once(node->table_once, [] {});
  return SpaceOperator(std::move(node));
}

SpaceOperator SpaceOperator::closure_of(const Matroid& m) {
  return SpaceOperator(std::make_shared<const Node>(m.universe_size(), m.ground(), Node::MatroidBacked{m}));
}

std::size_t SpaceOperator::universe_size() const noexcept { return node_->universe; }
ElementSet SpaceOperator::ground() const noexcept { return node_->ground; }

SpaceOperator SpaceOperator::dual() const {
  return SpaceOperator(std::make_shared<const Node>(node_->universe, node_->ground, Node::DualBacked{*this}));
}

ElementSet SpaceOperator::evaluate(ElementSet x) const {
  const auto& node = *node_;
  if (const auto* m = std::get_if<Node::MatroidBacked>(&node.data)) return span(m->matroid, x);
  const auto& base = std::get<Node::DualBacked>(node.data).base;
  auto out = x;
  for_each_element(node.ground - x, [&](std::size_t e) {
    if (!base(node.ground - x.with(e)).contains(e)) out = out.with(e);
  });
  return out;
}

const std::vector<ElementSet>& SpaceOperator::table() const {
  const auto& node = *node_;
  require_enumerable(node.universe);
  std::call_once(node.table_once, [&] {
    std::vector<ElementSet> table(std::size_t{1} << node.universe);
    for_each_subset(node.ground, [&](ElementSet x) { table[x.mask()] = evaluate(x); });
    validate_space(node.universe, node.ground, table);
    node.table = std::move(table);
  });
  return node.table;
}

ElementSet SpaceOperator::operator()(ElementSet x) const {
  if (!x.is_subset_of(node_->ground)) {
    throw Error(ErrorCode::kElementOutOfRange, "set " + x.to_braced_string() + " is not inside the ground set");
  }
  if (node_->universe <= kMaxOperatorGround) return table()[x.mask()];
  return evaluate(x);
}

ElementSet span(const Matroid& m, ElementSet x) {
  if (!x.is_subset_of(m.ground())) {
    throw Error(ErrorCode::kElementOutOfRange, "set " + x.to_braced_string() + " is not inside the ground set");
  }
  auto out = x;
  for (auto o : m.circuits()) {
    const auto outside = o - x;
    if (outside.size() == 1) out = out | outside;
  }
  return out;
}

bool same_operator(const SpaceOperator& a, const SpaceOperator& b) {
  if (a.ground() != b.ground()) return false;
  bool same = true;
  for_each_subset(a.ground(), [&](ElementSet x) {
    if (same && a(x) != b(x)) same = false;
  });
  return same;
}

bool is_idempotent(const SpaceOperator& s) {
  require_enumerable(s.universe_size());
  bool idempotent = true;
  for_each_subset(s.ground(), [&](ElementSet x) {
    if (idempotent && s(s(x)) != s(x)) idempotent = false;
  });
  return idempotent;
}

bool is_exchange(const SpaceOperator& s) { return is_idempotent(s.dual()); }

bool is_ie(const SpaceOperator& s) { return is_idempotent(s) && is_exchange(s); }

std::optional<DaggerViolation> find_dagger_violation(const SpaceOperator& s, const SpaceOperator& s_dual) {
  require_enumerable(s.universe_size());
  const auto g = s.ground();
  std::optional<DaggerViolation> found;
  for_each_element(g, [&](std::size_t e) {
    const auto rest = g.without(e);
    for_each_subset(rest, [&](ElementSet x_side) {
      if (found) return;
      const auto y_side = rest - x_side;
      if (s(x_side).contains(e) == s_dual(y_side).contains(e)) found = DaggerViolation{x_side, e, y_side};
    });
  });
  return found;
}

NonMatroidalIeSearch search_non_matroidal_ie(std::size_t n) {
  if (n > 3) throw Error(ErrorCode::kGroundTooLarge, "non-matroidal IE search runs on at most 3 elements");
  NonMatroidalIeSearch result;
  const auto subsets = std::size_t{1} << n;
  const auto all = ElementSet::full(n);

  // Closure tables of all matroids on {0..n-1}.
  std::set<std::vector<ElementSet>> closures;
  const GroundSet ground(n);
  for (std::size_t bits = 0; bits < (std::size_t{1} << subsets); ++bits) {
    std::vector<ElementSet> family;
    for (std::size_t s = 0; s < subsets; ++s) {
      if ((bits >> s) & 1U) family.emplace_back(static_cast<ElementSet::Mask>(s));
    }
    if (!check_axioms(ground, family).all_pass()) continue;
    ++result.matroids;
    const auto m = Matroid::from_family(ground, family);
    std::vector<ElementSet> table(subsets);
    for_each_subset(all, [&](ElementSet x) { table[x.mask()] = span(m, x); });
    closures.insert(std::move(table));
  }

  // Depth-first over masks in ascending order; every X - y precedes X, so
  // the lower bound below enforces monotonicity.
  std::vector<ElementSet> table(subsets);
  const auto visit = [&](auto&& self, std::size_t mask) -> void {
    if (mask == subsets) {
      ++result.spaces_examined;
      const auto op = SpaceOperator::from_table(n, table);
      if (!is_ie(op)) return;
      ++result.ie_operators;
      if (!closures.contains(table)) result.non_matroidal.push_back(table);
      return;
    }
    const ElementSet x(static_cast<ElementSet::Mask>(mask));
    auto lower = x;
    for_each_element(x, [&](std::size_t y) { lower = lower | table[x.without(y).mask()]; });
    for_each_subset(all - lower, [&](ElementSet extra) {
      table[mask] = lower | extra;
      self(self, mask + 1);
    });
  };
  visit(visit, 0);
  return result;
}

}  // namespace matroidkit
