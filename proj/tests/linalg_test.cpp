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

#include "matroidkit/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

#include "matroidkit/errors.hpp"
#include "oracles.hpp"

namespace matroidkit {
namespace {

const Field kGf2 = Field::prime(2);

Matrix a1() { return Matrix::from_integers(kGf2, 2, 3, {1, 0, 1, 0, 1, 1}); }

std::vector<Scalar> ints(const Field& f, std::initializer_list<std::int64_t> values) {
  std::vector<Scalar> out;
  for (auto v : values) out.push_back(f.from_integer(v));
  return out;
}

TEST(RrefTest, IdentityIsReduced) {
  const auto e = rref(Matrix::identity(kGf2, 2));
  EXPECT_EQ(e.reduced, Matrix::identity(kGf2, 2));
  EXPECT_EQ(e.pivot_columns, (std::vector<std::size_t>{0, 1}));
}

TEST(RrefTest, A1IsReduced) {
  const auto e = rref(a1());
  EXPECT_EQ(e.reduced, a1());
  EXPECT_EQ(e.pivot_columns, (std::vector<std::size_t>{0, 1}));
}

TEST(RrefTest, ZeroMatrix) {
  const Matrix z(kGf2, 2, 3);
  const auto e = rref(z);
  EXPECT_EQ(e.reduced, z);
  EXPECT_TRUE(e.pivot_columns.empty());
}

TEST(RrefTest, SwapsToFirstNonzeroRow) {
  const auto q = Field::rationals();
  const auto e = rref(Matrix::from_integers(q, 3, 3, {0, 2, 4, 0, 0, 0, 3, 0, 3}));
  EXPECT_EQ(e.reduced, Matrix::from_integers(q, 3, 3, {1, 0, 1, 0, 1, 2, 0, 0, 0}));
  EXPECT_EQ(e.pivot_columns, (std::vector<std::size_t>{0, 1}));
}

TEST(KernelTest, A1) {
  const auto k = kernel_basis(a1());
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], ints(kGf2, {1, 1, 1}));
}

TEST(KernelTest, IdentityIsInjective) { EXPECT_TRUE(kernel_basis(Matrix::identity(kGf2, 2)).empty()); }

TEST(KernelTest, ZeroRowSpansEverything) {
  const auto k = kernel_basis(Matrix(kGf2, 1, 2));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], ints(kGf2, {1, 0}));
  EXPECT_EQ(k[1], ints(kGf2, {0, 1}));
}

TEST(SolveTest, A1) {
  const auto b = ints(kGf2, {1, 1});
  const auto x = solve(a1(), b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, ints(kGf2, {1, 1, 0}));
}

TEST(SolveTest, Identity) {
  const auto q = Field::rationals();
  const std::vector<Scalar> b{q.from_fraction(1, 2), q.from_integer(-3)};
  EXPECT_EQ(solve(Matrix::identity(q, 2), b), b);
}

TEST(SolveTest, ZeroMatrixNoSolution) {
  const auto b = ints(kGf2, {1, 0});
  EXPECT_FALSE(solve(Matrix(kGf2, 2, 2), b).has_value());
}

TEST(SolveTest, DimensionMismatch) {
  const auto b = ints(kGf2, {1});
  EXPECT_THROW(solve(a1(), b), Error);
  EXPECT_THROW(a1().apply(b), Error);
}

TEST(MatrixTest, RejectsWrongEntryCountAndForeignEntries) {
  EXPECT_THROW(Matrix(kGf2, 2, 2, ints(kGf2, {1, 0, 1})), Error);
  EXPECT_THROW(Matrix(kGf2, 1, 1, {Field::rationals().one()}), Error);
}

// Rank by elimination against rank by exhaustive coefficient search.
TEST(LinalgProperty, RankKernelAndRrefAgreeWithOracle) {
  std::mt19937_64 rng(3);
  const Field fields[] = {Field::prime(2), Field::prime(3), Field::prime(5), Field::rationals()};
  for (int trial = 0; trial < 120; ++trial) {
    const auto& field = fields[trial % 4];
    const auto rows = 1 + rng() % 4;
    const auto cols = 1 + rng() % 5;
    const auto a = oracle::random_matrix(rng, field, rows, cols);
    const auto expected = oracle::rank(
        [&](ElementSet x) { return oracle::columns_independent(a, x); }, ElementSet::full(cols));
    EXPECT_EQ(rank(a), expected);
    const auto kernel = kernel_basis(a);
    EXPECT_EQ(kernel.size() + expected, cols);
    for (const auto& v : kernel) {
      for (const auto& entry : a.apply(v)) EXPECT_TRUE(entry.is_zero());
    }
    const auto once = rref(a);
    EXPECT_EQ(rref(once.reduced).reduced, once.reduced);
    const auto b = a.apply(oracle::random_matrix(rng, field, cols, 1).column(0));
    const auto x = solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a.apply(*x), b);
  }
}

}  // namespace
}  // namespace matroidkit
