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

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hoffman {

/// Sorted, duplicate-free list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  int operator[](std::size_t i) const { return members_[i]; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

struct Edge {
  int u;
  int v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Keeps sorted adjacency lists next to a packed bit matrix so that both
/// neighbourhood walks and adjacency tests are cheap at a few thousand
/// vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  /// Throws InputError on loops, repeated edges or out-of-range endpoints.
  void add_edge(int u, int v);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
};

/// Exact non-negative rational in lowest terms.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long num, long long den);
  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Graph on |W| vertices, reindexed by the sorted order of W.
Graph induced_subgraph(const Graph& g, const VertexSet& w);

/// Induced subgraph on N(x), vertices in sorted neighbour order.
Graph local_graph(const Graph& g, int x);

/// 2|E(G_x)| / d(x); an isolated vertex gives 0.
Rational average_local_degree(const Graph& g, int x);

/// Every member of W has at least |W| - p neighbours inside W.
bool is_p_plex(const Graph& g, const VertexSet& w, int p);

/// Largest p-plex, by exact branch and bound. Throws ResourceError when the
/// search exceeds `node_budget` branch nodes.
int max_plex_order(const Graph& g, int p, long long node_budget = 50'000'000);

bool is_regular(const Graph& g);

}  // namespace hoffman
