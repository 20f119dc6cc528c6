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

#include <gtest/gtest.h>

#include "matroidkit/errors.hpp"
#include "matroidkit/representation.hpp"
#include "matroidkit/structure.hpp"

namespace matroidkit {
namespace {

const Field kGf2 = Field::prime(2);

Matroid m_a1() { return Matroid::from_matrix(Matrix::from_integers(kGf2, 2, 3, {1, 0, 1, 0, 1, 1})); }
Matroid free_matroid(std::size_t n) { return Matroid::from_matrix(Matrix::identity(kGf2, n)); }

using Sets = std::vector<ElementSet>;

TEST(MatroidTest, IndependenceOfA1) {
  const auto m = m_a1();
  EXPECT_TRUE(m.is_independent(ElementSet{0, 1}));
  EXPECT_FALSE(m.is_independent(ElementSet{0, 1, 2}));
  EXPECT_TRUE(m.is_independent(ElementSet{}));
  EXPECT_TRUE(Matroid::uniform(0, 3).is_independent(ElementSet{}));
  EXPECT_THROW(m.is_independent(ElementSet{3}), Error);
}

TEST(MatroidTest, Circuits) {
  EXPECT_EQ(Matroid::uniform(1, 3).circuits(), (Sets{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(m_a1().circuits(), (Sets{{0, 1, 2}}));
  EXPECT_TRUE(free_matroid(3).circuits().empty());
}

TEST(MatroidTest, Bases) {
  EXPECT_EQ(Matroid::uniform(1, 3).bases(), (Sets{{0}, {1}, {2}}));
  EXPECT_EQ(m_a1().bases(), (Sets{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(Matroid::from_matrix(Matrix(kGf2, 2, 3)).bases(), (Sets{ElementSet{}}));
}

TEST(MatroidTest, Duals) {
  EXPECT_EQ(Matroid::uniform(1, 3).dual().bases(), (Sets{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(free_matroid(3).dual().bases(), (Sets{ElementSet{}}));
  EXPECT_EQ(m_a1().dual().bases(), (Sets{{0}, {1}, {2}}));
  EXPECT_EQ(m_a1().cocircuits(), (Sets{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(MatroidTest, DoubleDualStaysNested) {
  const auto m = m_a1();
  const auto dd = m.dual().dual();
  EXPECT_EQ(dd.backend(), Backend::kDual);
  ASSERT_NE(dd.parent(), nullptr);
  EXPECT_EQ(dd.parent()->backend(), Backend::kDual);
  EXPECT_TRUE(same_independence(dd, m));
}

TEST(MatroidTest, DeletionKeepsLabels) {
  const auto m = Matroid::uniform(2, 3).delete_elements(ElementSet{2});
  EXPECT_EQ(m.ground(), (ElementSet{0, 1}));
  EXPECT_EQ(m.bases(), (Sets{{0, 1}}));
  EXPECT_TRUE(m.circuits().empty());
}

TEST(MatroidTest, ContractionKeepsLabels) {
  const auto m = Matroid::uniform(2, 3).contract(ElementSet{0});
  EXPECT_EQ(m.ground(), (ElementSet{1, 2}));
  EXPECT_EQ(m.circuits(), (Sets{{1, 2}}));
  EXPECT_EQ(m.bases(), (Sets{{1}, {2}}));
  EXPECT_THROW(m.is_independent(ElementSet{0}), Error);
}

TEST(MatroidTest, ContractEmptyIsIdentity) {
  const auto m = m_a1();
  EXPECT_EQ(m.contract(ElementSet{}).backend(), m.backend());
  EXPECT_TRUE(same_independence(m.contract(ElementSet{}), m));
}

TEST(MatroidTest, RejectsNonMatroidFamily) {
  const Sets family{ElementSet{}, ElementSet{0}, ElementSet{1}, ElementSet{2}, ElementSet{0, 1}};
  try {
    Matroid::from_family(GroundSet(3), family);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAMatroid);
  }
}

TEST(MatroidTest, RankAndGreedy) {
  const auto m = m_a1();
  EXPECT_EQ(m.rank(), 2u);
  EXPECT_EQ(m.rank(ElementSet{2}), 1u);
  EXPECT_EQ(m.greedy_extend(ElementSet{}, ElementSet{0, 1, 2}), (ElementSet{0, 1}));
  EXPECT_EQ(m.greedy_extend(ElementSet{}, ElementSet{0, 1, 2}, true), (ElementSet{1, 2}));
  EXPECT_EQ(m.greedy_extend(ElementSet{2}, ElementSet{0, 1, 2}), (ElementSet{0, 2}));
}

TEST(MatroidTest, FirstDisagreement) {
  EXPECT_FALSE(first_disagreement(m_a1(), Matroid::uniform(2, 3)).has_value());
  EXPECT_EQ(first_disagreement(m_a1(), Matroid::uniform(1, 3)), (ElementSet{0, 1}));
  EXPECT_EQ(first_disagreement(m_a1(), Matroid::uniform(2, 4)), ElementSet{3});
}

TEST(MatroidTest, LargeGroundIsUntabulated) {
  const auto m = Matroid::from_matrix(Matrix::identity(kGf2, 20));
  EXPECT_TRUE(m.is_independent(ElementSet::full(20)));
  EXPECT_EQ(m.dual().rank(), 0u);
  EXPECT_EQ(m.contract(ElementSet{0, 1}).rank(), 18u);
}

}  // namespace
}  // namespace matroidkit
