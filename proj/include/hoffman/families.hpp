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

#include <string>
#include <vector>

#include "hoffman/graph.hpp"
#include "hoffman/hoffman_graph.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

/// Largest vertex count a generator will build.
inline constexpr long long kFamilyBudget = 20'000;

/// q^D tuples in lexicographic order, first coordinate most significant.
Graph hamming(int d, int q);
/// p-subsets of {0..v-1} in colex order.
Graph johnson(int v, int p);
/// K_t1 x K_t2, vertex (i, j) at index i * t2 + j.
Graph grid(int t1, int t2);
/// Vertex v becomes the pair (v, v + n).
Graph clique_extension_2(const Graph& g);
/// Vertices are the edges of g in lexicographic order.
Graph line_graph(const Graph& g);

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph petersen();
Graph complete_bipartite(int a, int b);

struct Hypergraph {
  int vertex_count = 0;
  std::vector<VertexSet> edges;
};

/// One vertex per edge (list order), adjacent when the edges meet.
Graph intersection_graph(const Hypergraph& h);

/// All edges have size h and no vertex pair lies in two edges.
bool is_linear_uniform(const Hypergraph& hg, int h);

/// Fat vertices become hypergraph vertices; slim vertex x becomes the edge
/// of its fat neighbours. Requires every slim vertex to have exactly t+1
/// fat neighbours and no pair to share two. Throws InputError naming the
/// offending vertex or pair.
Hypergraph hypergraph_from_cover(const HoffmanGraph& h, int t);

enum class Family { hamming, johnson, grid, grid_2clique };

struct FamilySpec {
  Family family;
  int a = 0;  // D, v or t1
  int b = 0;  // q, p or t2
};

std::string to_string(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);

/// Closed-form spectrum with integer eigenvalues, merged and descending.
Spectrum family_spectrum(const FamilySpec& spec);

}  // namespace hoffman
