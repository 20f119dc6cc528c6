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

#include <gtest/gtest.h>

#include <set>

#include "matroidkit/axioms.hpp"
#include "matroidkit/errors.hpp"
#include "oracles.hpp"

namespace matroidkit {
namespace {

using Table = std::vector<ElementSet>;

Table identity_table(std::size_t n) {
  Table t;
  for (std::uint32_t s = 0; s < (1u << n); ++s) t.push_back(ElementSet(s));
  return t;
}

TEST(SpanTest, UniformExamples) {
  const auto m = Matroid::uniform(2, 3);
  EXPECT_EQ(span(m, ElementSet{0, 1}), (ElementSet{0, 1, 2}));
  EXPECT_EQ(span(m, ElementSet{2}), ElementSet{2});
  EXPECT_EQ(span(m, ElementSet{0, 1, 2}), (ElementSet{0, 1, 2}));
}

TEST(DualOperatorTest, UniformExample) {
  const auto s = SpaceOperator::closure_of(Matroid::uniform(2, 3));
  EXPECT_EQ(s.dual()(ElementSet{0}), (ElementSet{0, 1, 2}));
}

TEST(DualOperatorTest, IdentityDualIsConstantFull) {
  const auto s = SpaceOperator::from_table(3, identity_table(3));
  const auto s_dual = s.dual();
  for (auto image : s_dual.table()) EXPECT_EQ(image, ElementSet::full(3));
}

TEST(DualOperatorTest, DaggerHoldsForUniform) {
  const auto s = SpaceOperator::closure_of(Matroid::uniform(2, 4));
  EXPECT_FALSE(find_dagger_violation(s, s.dual()).has_value());
  EXPECT_TRUE(same_operator(s.dual().dual(), s));
}

TEST(DualOperatorTest, DaggerDetectsWrongPartner) {
  const auto s = SpaceOperator::closure_of(Matroid::uniform(2, 3));
  EXPECT_TRUE(find_dagger_violation(s, s).has_value());
}

TEST(IeTest, ConstantFullIsIdempotent) {
  EXPECT_TRUE(is_idempotent(SpaceOperator::from_table(3, Table(8, ElementSet::full(3)))));
}

TEST(IeTest, HandBuiltNonIdempotent) {
  // S({0}) = {0,1}, S({0,1}) = {0,1,2}; everything else is the least
  // monotone extensive completion.
  Table t(8);
  for (std::uint32_t s = 0; s < 8; ++s) {
    auto x = ElementSet(s);
    if (x.contains(0)) x = x.with(1);
    if (x.contains(0) && x.contains(1) && s != 1) x = x.with(2);
    t[s] = x;
  }
  ASSERT_EQ(t[1], (ElementSet{0, 1}));
  ASSERT_EQ(t[3], (ElementSet{0, 1, 2}));
  const auto s = SpaceOperator::from_table(3, t);
  EXPECT_FALSE(is_idempotent(s));
  EXPECT_FALSE(is_ie(s));
}

TEST(IeTest, ClosureOfMatroidIsIe) {
  const auto m = Matroid::from_matrix(Matrix::from_integers(Field::prime(3), 2, 4, {1, 0, 1, 1, 0, 1, 1, 2}));
  EXPECT_TRUE(is_ie(SpaceOperator::closure_of(m)));
}

TEST(SpaceTest, RejectsNonSpaces) {
  Table not_extensive = identity_table(2);
  not_extensive[1] = ElementSet{};
  EXPECT_THROW(SpaceOperator::from_table(2, not_extensive), Error);
  // {0} <= {0,1} but S({0}) = {0,2} is not inside S({0,1}) = {0,1}.
  Table not_monotone = identity_table(3);
  not_monotone[1] = ElementSet{0, 2};
  EXPECT_THROW(SpaceOperator::from_table(3, not_monotone), Error);
  EXPECT_THROW(SpaceOperator::from_table(2, Table(3)), Error);
}

// Independent count: every extensive monotone table on n elements, the IE
// ones among them, and the closures of every matroid (families found by
// brute-force axiom checking, closures by rank).
struct Census {
  std::size_t spaces = 0;
  std::size_t ie = 0;
  std::size_t matroids = 0;
  std::size_t ie_not_matroidal = 0;
};

Census census(std::size_t n) {
  const std::uint32_t subsets = 1u << n;
  std::set<Table> closures;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << subsets); ++bits) {
    std::vector<ElementSet> family;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if ((bits >> s) & 1u) family.push_back(ElementSet(s));
    }
    if (!check_axioms(GroundSet(n), family).all_pass()) continue;
    const auto independent = [&](ElementSet x) { return ((bits >> x.mask()) & 1u) != 0; };
    Table t;
    for (std::uint32_t s = 0; s < subsets; ++s) t.push_back(oracle::closure(independent, n, ElementSet(s)));
    closures.insert(t);
  }
  Census c;
  c.matroids = closures.size();
  Table t(subsets);
  std::function<void(std::uint32_t)> fill = [&](std::uint32_t s) {
    if (s == subsets) {
      for (std::uint32_t a = 0; a < subsets; ++a) {
        for (std::uint32_t b = 0; b < subsets; ++b) {
          if ((a & ~b) == 0 && !t[a].is_subset_of(t[b])) return;
        }
      }
      ++c.spaces;
      const auto op = SpaceOperator::from_table(n, t);
      if (is_ie(op)) {
        ++c.ie;
        if (!closures.contains(t)) ++c.ie_not_matroidal;
      }
      return;
    }
    for_each_subset(ElementSet::full(n) - ElementSet(s), [&](ElementSet extra) {
      t[s] = ElementSet(s) | extra;
      fill(s + 1);
    });
  };
  fill(0);
  return c;
}

TEST(NonMatroidalIeSearchTest, AgreesWithIndependentCensus) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto expected = census(n);
    const auto found = search_non_matroidal_ie(n);
    EXPECT_EQ(found.spaces_examined, expected.spaces) << n;
    EXPECT_EQ(found.ie_operators, expected.ie) << n;
    EXPECT_EQ(found.matroids, expected.matroids) << n;
    EXPECT_EQ(found.non_matroidal.size(), expected.ie_not_matroidal) << n;
  }
  EXPECT_THROW(search_non_matroidal_ie(4), Error);
}

}  // namespace
}  // namespace matroidkit
