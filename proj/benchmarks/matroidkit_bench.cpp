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

#include <benchmark/benchmark.h>

#include "matroidkit/cli/corpus.hpp"
#include "matroidkit/cli/verify.hpp"
#include "matroidkit/graphic.hpp"
#include "matroidkit/linalg.hpp"
#include "matroidkit/representation.hpp"
#include "matroidkit/space.hpp"
#include "matroidkit/structure.hpp"

namespace matroidkit {
namespace {

Matrix seeded(const Field& field, std::size_t rows, std::size_t cols) {
  cli::Lcg rng(1);
  return cli::random_matrix(rng, field, rows, cols);
}

void BM_RrefGf3(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = seeded(Field::prime(3), n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rref(a));
}
BENCHMARK(BM_RrefGf3)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefRationals(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = seeded(Field::rationals(), n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rref(a));
}
BENCHMARK(BM_RrefRationals)->Arg(8)->Arg(16);

// A fresh matroid per iteration so the rank table and circuit list are
// rebuilt every time.
void BM_Circuits(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = seeded(Field::prime(2), 4, n);
  for (auto _ : state) benchmark::DoNotOptimize(Matroid::from_matrix(a).circuits().size());
}
BENCHMARK(BM_Circuits)->Arg(6)->Arg(10)->Arg(14);

void BM_ClosureIeCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = seeded(Field::prime(3), 3, n);
  for (auto _ : state) benchmark::DoNotOptimize(is_ie(SpaceOperator::closure_of(Matroid::from_matrix(a))));
}
BENCHMARK(BM_ClosureIeCheck)->Arg(6)->Arg(10);

void BM_TsDuality(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const VectorFamily f(seeded(Field::rationals(), 3, n));
  for (auto _ : state) benchmark::DoNotOptimize(verify_ts_duality(f).pass());
}
BENCHMARK(BM_TsDuality)->Arg(6)->Arg(8);

void BM_GraphicK4(benchmark::State& state) {
  const MultiGraph k4(4, {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 1, 2}, {4, 1, 3}, {5, 2, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(verify_graphic_representable(k4, Field::prime(5)).pass);
}
BENCHMARK(BM_GraphicK4);

void BM_VerifyCorpus(benchmark::State& state) {
  cli::CorpusSpec spec;
  spec.count = static_cast<std::size_t>(state.range(0));
  spec.max_ground = 6;
  spec.generators = {cli::Generator::kRandomMatrixGf2, cli::Generator::kRandomMatrixQ, cli::Generator::kRandomGraph};
  for (auto _ : state) benchmark::DoNotOptimize(cli::verify_all(spec).lines().size());
}
BENCHMARK(BM_VerifyCorpus)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace matroidkit

BENCHMARK_MAIN();
