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

#include "matroidkit/structure.hpp"

#include <gtest/gtest.h>

#include "matroidkit/errors.hpp"

namespace matroidkit {
namespace {

const Field kGf2 = Field::prime(2);

Matroid m_a1() { return Matroid::from_matrix(Matrix::from_integers(kGf2, 2, 3, {1, 0, 1, 0, 1, 1})); }

ErrorCode code_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvariantViolation;
}

TEST(FundamentalCircuitTest, Examples) {
  EXPECT_EQ(fundamental_circuit(m_a1(), ElementSet{0, 1}, 2), (ElementSet{0, 1, 2}));
  EXPECT_EQ(fundamental_circuit(Matroid::uniform(1, 3), ElementSet{0}, 1), (ElementSet{0, 1}));
  // Column 1 is zero: a loop.
  const auto loopy = Matroid::from_matrix(Matrix::from_integers(kGf2, 1, 2, {1, 0}));
  EXPECT_EQ(fundamental_circuit(loopy, ElementSet{0}, 1), ElementSet{1});
}

TEST(FundamentalCircuitTest, Errors) {
  const auto m = m_a1();
  EXPECT_EQ(code_of([&] { fundamental_circuit(m, ElementSet{0}, 2); }), ErrorCode::kNotABase);
  EXPECT_EQ(code_of([&] { fundamental_circuit(m, ElementSet{0, 1}, 1); }), ErrorCode::kElementInBase);
  EXPECT_EQ(code_of([&] { fundamental_circuit(m, ElementSet{0, 1}, 5); }), ErrorCode::kElementOutOfRange);
  EXPECT_EQ(code_of([&] { fundamental_cocircuit(m, ElementSet{0, 1}, 2); }), ErrorCode::kElementNotInBase);
}

TEST(FundamentalCocircuitTest, Examples) {
  EXPECT_EQ(fundamental_cocircuit(m_a1(), ElementSet{0, 1}, 0), (ElementSet{0, 2}));
  EXPECT_EQ(fundamental_cocircuit(m_a1(), ElementSet{0, 1}, 1), (ElementSet{1, 2}));
  EXPECT_EQ(fundamental_cocircuit(Matroid::uniform(2, 2), ElementSet{0, 1}, 1), ElementSet{1});
}

TEST(CocircuitThroughPairTest, Examples) {
  const auto b = cocircuit_through_pair(m_a1(), ElementSet{0, 1, 2}, 0, 1);
  EXPECT_EQ((b & ElementSet{0, 1, 2}), (ElementSet{0, 1}));
  EXPECT_EQ(b, (ElementSet{0, 1}));
  const auto u = cocircuit_through_pair(Matroid::uniform(1, 3), ElementSet{0, 1}, 0, 1);
  EXPECT_EQ((u & ElementSet{0, 1}), (ElementSet{0, 1}));
  EXPECT_EQ(code_of([] { cocircuit_through_pair(m_a1(), ElementSet{0, 1}, 0, 1); }), ErrorCode::kNotACircuit);
  EXPECT_EQ(code_of([] { cocircuit_through_pair(m_a1(), ElementSet{0, 1, 2}, 0, 0); }),
            ErrorCode::kElementsNotInCircuit);
}

TEST(LiftCircuitTest, Examples) {
  EXPECT_EQ(lift_circuit(Matroid::uniform(2, 3), ElementSet{0}, ElementSet{}, ElementSet{1, 2}), (ElementSet{0, 1, 2}));
  EXPECT_EQ(lift_circuit(m_a1(), ElementSet{}, ElementSet{}, ElementSet{0, 1, 2}), (ElementSet{0, 1, 2}));
  const auto m = m_a1();
  const auto minor = m.contract(ElementSet{2});
  ASSERT_FALSE(minor.circuits().empty());
  for (auto o : minor.circuits()) {
    const auto lifted = lift_circuit(m, ElementSet{2}, ElementSet{}, o);
    EXPECT_TRUE(o.is_subset_of(lifted));
    EXPECT_TRUE(lifted.is_subset_of(o.with(2)));
    EXPECT_EQ(lifted, (ElementSet{0, 1, 2}));
  }
  EXPECT_EQ(code_of([&] { lift_circuit(m, ElementSet{2}, ElementSet{}, ElementSet{0}); }), ErrorCode::kNotAMinorCircuit);
  EXPECT_EQ(code_of([&] { lift_circuit(m, ElementSet{2}, ElementSet{2}, ElementSet{0, 1}); }),
            ErrorCode::kNotAMinorCircuit);
}

TEST(PositionTest, Examples) {
  const auto m = m_a1();
  const auto p = position(m, ElementSet{0}, 1, ElementSet{2});
  EXPECT_EQ(p.side, Position::Side::kCocircuit);
  EXPECT_EQ(p.witness, (ElementSet{1, 2}));
  const auto q = position(m, ElementSet{0, 2}, 1, ElementSet{});
  EXPECT_EQ(q.side, Position::Side::kCircuit);
  EXPECT_EQ(q.witness, (ElementSet{0, 1, 2}));
  const auto loopy = Matroid::from_matrix(Matrix::from_integers(kGf2, 1, 3, {1, 0, 1}));
  const auto l = position(loopy, ElementSet{2}, 1, ElementSet{0});
  EXPECT_EQ(l.side, Position::Side::kCircuit);
  EXPECT_EQ(l.witness, ElementSet{1});
  EXPECT_EQ(code_of([&] { position(m, ElementSet{0}, 1, ElementSet{}); }), ErrorCode::kNotAPartition);
  EXPECT_EQ(code_of([&] { position(m, ElementSet{0, 1}, 1, ElementSet{2}); }), ErrorCode::kNotAPartition);
}

TEST(TamenessTest, Examples) {
  EXPECT_EQ(tameness(m_a1()).max_intersection, 2u);
  EXPECT_EQ(tameness(Matroid::from_matrix(Matrix::identity(kGf2, 3))).max_intersection, 0u);
  EXPECT_EQ(tameness(Matroid::uniform(1, 3)).max_intersection, 2u);
  EXPECT_TRUE(tameness(m_a1()).all_finite);
}

}  // namespace
}  // namespace matroidkit
