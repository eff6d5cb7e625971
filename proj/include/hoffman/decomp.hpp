// Copyright 2026 The hoffman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "hoffman/graph.hpp"
#include "hoffman/hoffman_graph.hpp"

namespace hoffman {

/// A partition of the slim vertices for which the special matrix is block
/// diagonal, together with the Hoffman subgraphs generated by each part.
struct Decomposition {
  std::vector<VertexSet> parts;
  std::vector<HoffmanGraph> part_graphs;
};

/// Finest decomposition: parts are the connected components of the graph on
/// slim vertices joining x and y whenever S_xy != 0. Parts are ordered by
/// their smallest member.
Decomposition decompose(const HoffmanGraph& h);

bool is_indecomposable(const HoffmanGraph& h);

/// Combinatorial decomposition criterion for the family of subgraphs
/// generated by `parts`:
///  (i)   every slim and fat vertex of h lies in some member,
///  (ii)  members have disjoint slim sets,
///  (iii) members contain every fat neighbour of their slim vertices,
///  (iv)  slim vertices from different members share at most one fat
///        neighbour, and share one exactly when they are adjacent.
/// Throws InputError unless `parts` partition the slim vertices.
bool check_decomposition(const HoffmanGraph& h,
                         const std::vector<VertexSet>& parts);

/// Whether S(h) has no nonzero entry between different parts.
bool is_block_diagonal(const HoffmanGraph& h,
                       const std::vector<VertexSet>& parts);

}  // namespace hoffman
