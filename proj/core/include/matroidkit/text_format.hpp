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

#ifndef MATROIDKIT_TEXT_FORMAT_HPP_
#define MATROIDKIT_TEXT_FORMAT_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matroidkit/element_set.hpp"
#include "matroidkit/matrix.hpp"
#include "matroidkit/multigraph.hpp"
#include "matroidkit/space.hpp"

// Line-oriented text formats. Blank lines are ignored; everything else must
// match exactly. Errors are Error(kParseError) with a "parse error: ..."
// message (or the domain error of the value being built, e.g. kNotPrime).
//
//   matrix       field gf <p> | field q
//                rows <m>
//                cols <n>
//                <m lines of n entries>     integers mod p, or a / a/b
//
//   set system   ground <n>
//                ind <i,j,...> | ind -      one line per independent set
//
//   operator     ground <n>
//                map <mask-in> <mask-out>   2^n lines, decimal masks
//
//   graph        vertices <n>
//                edge <id> <u> <v>

namespace matroidkit {

enum class SourceKind { kMatrix, kSetSystem, kOperatorTable, kGraph };

/// Decided by the first line (and, for "ground", the second).
SourceKind detect_source_kind(std::string_view text);

Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);

struct SetSystem {
  GroundSet ground;
  std::vector<ElementSet> family;
};
SetSystem parse_set_system(std::string_view text);
std::string format_set_system(std::size_t ground_size, std::span<const ElementSet> family);

SpaceOperator parse_operator_table(std::string_view text);
std::string format_operator_table(const SpaceOperator& s);

MultiGraph parse_graph(std::string_view text);
std::string format_graph(const MultiGraph& g);

}  // namespace matroidkit

#endif  // MATROIDKIT_TEXT_FORMAT_HPP_
