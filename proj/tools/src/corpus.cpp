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

#include "matroidkit/cli/corpus.hpp"

#include <algorithm>
#include <cstdio>

#include "matroidkit/errors.hpp"

namespace matroidkit::cli {

namespace {

std::string padded(std::size_t i) {
  char buffer[16];
  std::snprintf(buffer, sizeof buffer, "%04zu", i);
  return buffer;
}

Field field_of(Generator g) {
  switch (g) {
    case Generator::kRandomMatrixGf2: return Field::prime(2);
    case Generator::kRandomMatrixGf3: return Field::prime(3);
    case Generator::kRandomMatrixGf5: return Field::prime(5);
    default: return Field::rationals();
  }
}

}  // namespace

std::string to_string(Generator g) {
  switch (g) {
    case Generator::kExplicitUniform: return "explicit-uniform";
    case Generator::kRandomMatrixGf2: return "random-matrix-gf2";
    case Generator::kRandomMatrixGf3: return "random-matrix-gf3";
    case Generator::kRandomMatrixGf5: return "random-matrix-gf5";
    case Generator::kRandomMatrixQ: return "random-matrix-q";
    case Generator::kRandomGraph: return "random-graph";
  }
  return "unknown";
}

void CorpusSpec::validate() const {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "corpus count must be at least 1");
  if (max_ground < 1 || max_ground > kMaxCorpusGround) {
    throw Error(ErrorCode::kInvalidArgument, "max ground size must be between 1 and 10");
  }
  if (generators.empty()) throw Error(ErrorCode::kInvalidArgument, "no corpus generators selected");
}

Matrix random_matrix(Lcg& rng, const Field& field, std::size_t rows, std::size_t cols) {
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (field.is_prime_field()) {
      entries.push_back(field.from_integer(rng.below(static_cast<std::uint32_t>(field.characteristic()))));
    } else {
      const auto num = static_cast<std::int64_t>(rng.below(7)) - 3;
      const auto den = static_cast<std::int64_t>(rng.below(3)) + 1;
      entries.push_back(field.from_fraction(num, den));
    }
  }
  return Matrix(field, rows, cols, std::move(entries));
}

MultiGraph random_graph(Lcg& rng, std::size_t vertices, std::size_t edges) {
  std::vector<Edge> list;
  for (std::size_t id = 0; id < edges; ++id) {
    const auto u = rng.below(static_cast<std::uint32_t>(vertices));
    const auto v = rng.below(static_cast<std::uint32_t>(vertices));
    list.push_back(Edge{id, u, v});
  }
  return MultiGraph(vertices, std::move(list));
}

std::vector<Instance> fixed_graphs(std::size_t max_ground) {
  std::vector<Instance> all;
  all.push_back({"graph-triangle", MultiGraph(3, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}})});
  all.push_back({"graph-loop-parallel", MultiGraph(3, {{0, 0, 0}, {1, 0, 1}, {2, 0, 1}, {3, 1, 2}})});
  all.push_back({"graph-theta", MultiGraph(4, {{0, 0, 1}, {1, 1, 3}, {2, 0, 2}, {3, 2, 3}, {4, 0, 3}})});
  all.push_back({"graph-k4", MultiGraph(4, {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 1, 2}, {4, 1, 3}, {5, 2, 3}})});
  std::vector<Instance> out;
  for (auto& instance : all) {
    if (std::get<MultiGraph>(instance.payload).edge_count() <= max_ground) out.push_back(std::move(instance));
  }
  return out;
}

std::vector<Instance> generate_corpus(const CorpusSpec& spec) {
  spec.validate();
  std::vector<Instance> out;
  const auto enabled = [&](Generator g) {
    return std::find(spec.generators.begin(), spec.generators.end(), g) != spec.generators.end();
  };

  if (enabled(Generator::kExplicitUniform)) {
    for (std::size_t n = 0; n <= spec.max_ground; ++n) {
      for (std::size_t r = 0; r <= n; ++r) {
        out.push_back({"uniform-" + std::to_string(r) + "-" + std::to_string(n), UniformInstance{r, n}});
      }
    }
  }
  if (enabled(Generator::kRandomGraph)) {
    for (auto& g : fixed_graphs(spec.max_ground)) out.push_back(std::move(g));
  }

  std::vector<Generator> random;
  for (auto g : spec.generators) {
    if (g != Generator::kExplicitUniform && std::find(random.begin(), random.end(), g) == random.end()) {
      random.push_back(g);
    }
  }
  if (random.empty()) return out;

  Lcg rng(spec.seed);
  const auto max_ground = static_cast<std::uint32_t>(spec.max_ground);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const auto g = random[i % random.size()];
    if (g == Generator::kRandomGraph) {
      const auto edges = 1 + rng.below(max_ground);
      const auto vertices = 1 + rng.below(5);
      out.push_back({"graph-" + padded(i), random_graph(rng, vertices, edges)});
    } else {
      const auto field = field_of(g);
      const auto cols = 1 + rng.below(max_ground);
      const auto rows = 1 + rng.below(4);
      const auto tag = field.is_prime_field() ? "gf" + std::to_string(field.characteristic()) : std::string("q");
      out.push_back({"matrix-" + tag + "-" + padded(i), VectorFamily(random_matrix(rng, field, rows, cols))});
    }
  }
  return out;
}

}  // namespace matroidkit::cli
