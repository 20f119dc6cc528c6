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

#ifndef MATROIDKIT_GRAPHIC_HPP_
#define MATROIDKIT_GRAPHIC_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "matroidkit/field.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/multigraph.hpp"
#include "matroidkit/representation.hpp"

namespace matroidkit {

/// Edge sets without cycles are independent; decided by union-find.
Matroid cycle_matroid(const MultiGraph& g);

/// The dual of the cycle matroid; its circuits are the minimal edge cuts.
Matroid bond_matroid(const MultiGraph& g);

/// Vertices as rows; the column of edge {u, v} with u < v has +1 at u and -1
/// at v. Loops give zero columns.
VectorFamily signed_incidence(const MultiGraph& g, const Field& field);

/// Minimal nonempty edge sets whose removal increases the number of
/// connected components, by direct enumeration with breadth-first search.
/// Ascending mask order. Throws kGroundTooLarge above 20 edges.
std::vector<ElementSet> minimal_edge_cuts(const MultiGraph& g);

struct GraphicReport {
  bool pass = true;
  std::size_t subsets_compared = 0;
  std::optional<ElementSet> mismatch;
};

/// Compares the cycle matroid with the vector matroid of the signed
/// incidence matrix on every edge subset. Throws kGroundTooLarge above 16
/// edges.
GraphicReport verify_graphic_representable(const MultiGraph& g, const Field& field);

}  // namespace matroidkit

#endif  // MATROIDKIT_GRAPHIC_HPP_
