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

#include "matroidkit/axioms.hpp"

#include <vector>

#include "matroidkit/errors.hpp"

namespace matroidkit {

std::string AxiomCheck::witness() const {
  std::string out;
  if (first) out += first->to_braced_string();
  if (second) out += (out.empty() ? "" : " ") + second->to_braced_string();
  return out;
}

std::string AxiomReport::describe_failure() const {
  if (!i1.pass) return "I1: empty set missing";
  if (!i2.pass) return "I2: " + i2.first->to_braced_string() + " is a member but " +
                       i2.second->to_braced_string() + " is not";
  if (!i3.pass) return "I3: no augmentation of I=" + i3.first->to_braced_string() + " from maximal I'=" +
                       i3.second->to_braced_string();
  if (!im.pass) return "IM: no maximal member between I=" + im.first->to_braced_string() + " and X=" +
                       im.second->to_braced_string();
  return {};
}

AxiomReport check_axioms(const GroundSet& ground, std::span<const ElementSet> family) {
  const auto n = ground.size();
  if (n > kMaxEnumerableGround) {
    throw Error(ErrorCode::kGroundTooLarge, "axiom check needs a ground set of at most 20 elements");
  }
  const auto all = ground.all();
  std::vector<bool> member(std::size_t{1} << n, false);
  for (auto s : family) {
    if (!s.is_subset_of(all)) {
      throw Error(ErrorCode::kElementOutOfRange, "set " + s.to_braced_string() + " is not inside the ground set");
    }
    member[s.mask()] = true;
  }
  const auto in = [&](ElementSet s) { return static_cast<bool>(member[s.mask()]); };

  std::vector<ElementSet> members;
  for_each_subset(all, [&](ElementSet s) {
    if (in(s)) members.push_back(s);
  });

  AxiomReport report;

  if (!in(ElementSet{})) {
    report.i1 = {false, ElementSet{}, std::nullopt};
  }

  // Closure under subsets reduces to closure under single-element removal.
  for (auto s : members) {
    bool failed = false;
    for_each_element(s, [&](std::size_t x) {
      if (failed || in(s.without(x))) return;
      report.i2 = {false, s, s.without(x)};
      failed = true;
    });
    if (failed) break;
  }

  std::vector<ElementSet> maximal;
  std::vector<ElementSet> non_maximal;
  for (auto s : members) {
    bool extendable = false;
    for_each_subset(all - s, [&](ElementSet t) {
      if (!extendable && !t.empty() && in(s | t)) extendable = true;
    });
    (extendable ? non_maximal : maximal).push_back(s);
  }
  for (auto i : non_maximal) {
    for (auto j : maximal) {
      bool augmentable = false;
      for_each_element(j - i, [&](std::size_t x) {
        if (in(i.with(x))) augmentable = true;
      });
      if (!augmentable) {
        report.i3 = {false, i, j};
        break;
      }
    }
    if (!report.i3.pass) break;
  }

  // For every X and every member I inside X, a largest member of the interval
  // [I, X] is maximal there; verify the interval has one.
  for_each_subset(all, [&](ElementSet x) {
    if (!report.im.pass) return;
    for_each_subset(x, [&](ElementSet i) {
      if (!report.im.pass || !in(i)) return;
      std::optional<ElementSet> best;
      for_each_subset(x - i, [&](ElementSet t) {
        const auto candidate = i | t;
        if (in(candidate) && (!best || candidate.size() > best->size())) best = candidate;
      });
      bool is_maximal = best.has_value();
      if (best) {
        for_each_subset(x - *best, [&](ElementSet t) {
          if (!t.empty() && in(*best | t)) is_maximal = false;
        });
      }
      if (!is_maximal) report.im = {false, i, x};
    });
  });

  return report;
}

}  // namespace matroidkit
