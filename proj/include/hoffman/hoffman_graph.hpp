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

#include <map>
#include <vector>

#include "hoffman/graph.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

/// A graph whose vertices are labelled slim or fat. Fat vertices are never
/// adjacent to each other, so each one is stored as the set of its slim
/// neighbours. Distinct fat vertices may share a neighbourhood.
class HoffmanGraph {
 public:
  HoffmanGraph() = default;
  /// Throws InputError if a fat neighbourhood is empty or out of range.
  HoffmanGraph(Graph slim, std::vector<VertexSet> fat_neighbors);

  int slim_count() const { return slim_.order(); }
  int fat_count() const { return static_cast<int>(fat_adj_.size()); }

  const Graph& slim() const { return slim_; }
  /// Slim neighbours of fat vertex f.
  const VertexSet& fat_neighbors(int f) const { return fat_adj_[f]; }
  const std::vector<VertexSet>& fat_neighborhoods() const { return fat_adj_; }
  /// Fat neighbours of slim vertex x, ascending.
  const std::vector<int>& fats_of(int x) const { return fats_of_[x]; }
  int fat_degree(int x) const { return static_cast<int>(fats_of_[x].size()); }

  /// Number of fat vertices adjacent to both x and y.
  int common_fats(int x, int y) const;

  friend bool operator==(const HoffmanGraph& a, const HoffmanGraph& b) {
    return a.slim_ == b.slim_ && a.fat_adj_ == b.fat_adj_;
  }

 private:
  Graph slim_;
  std::vector<VertexSet> fat_adj_;
  std::vector<std::vector<int>> fats_of_;
};

/// Integer symmetric matrix indexed by slim vertices.
class SpecialMatrix {
 public:
  SpecialMatrix() = default;
  explicit SpecialMatrix(int dim);
  static SpecialMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int dim() const { return dim_; }
  int operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * dim_ + j];
  }
  void set(int i, int j, int value);

  SymMatrix to_sym() const;
  SpecialMatrix principal(std::span<const int> indices) const;

  friend bool operator==(const SpecialMatrix&, const SpecialMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<int> data_;
};

/// S = A_slim - C C^T: S_xx = -|N_fat(x)|, S_xy = A_xy - |N_fat(x) ∩ N_fat(y)|.
SpecialMatrix special_matrix(const HoffmanGraph& h);

/// Off-diagonal nonzero entries of the special matrix, per slim vertex, as
/// (neighbour, value) pairs in ascending neighbour order. Avoids the dense
/// matrix for large Hoffman graphs.
std::vector<std::vector<std::pair<int, int>>> special_off_diagonal(
    const HoffmanGraph& h);

double lambda_min(const HoffmanGraph& h);

bool is_t_fat(const HoffmanGraph& h, int t);

/// Hoffman subgraph induced by W and every fat vertex meeting W. Slim
/// vertices keep the sorted order of W; fat vertices keep their order.
HoffmanGraph generated_subgraph(const HoffmanGraph& h, const VertexSet& w);

/// One slim vertex adjacent to t fat vertices.
HoffmanGraph cherry(int t);

/// Replaces each selected fat vertex f by a slim clique of size sizes[f],
/// joined to every former neighbour of f. Original slim vertices come first,
/// new clique vertices follow in fat-index order; unselected fat vertices
/// are kept in order.
HoffmanGraph clique_expand(const HoffmanGraph& h,
                           const std::map<int, int>& sizes);

/// Expands every fat vertex into a clique of the same size n.
HoffmanGraph clique_expand_all(const HoffmanGraph& h, int n);

Graph slim_graph(const HoffmanGraph& h);

/// Label-preserving isomorphism test by backtracking over slim bijections.
/// Throws ResourceError past `node_budget` search nodes.
bool hoffman_isomorphic(const HoffmanGraph& a, const HoffmanGraph& b,
                        long long node_budget = 10'000'000);

/// Whether `part` is isomorphic to an induced Hoffman subgraph of `host`.
bool embeds_as_induced(const HoffmanGraph& part, const HoffmanGraph& host,
                       long long node_budget = 10'000'000);

/// Whether `sub` (same slim vertex set and slim graph as `host`) is obtained
/// from `host` by deleting fat vertices, i.e. its fat neighbourhoods are a
/// sub-multiset of the host's.
bool fat_submultiset(const HoffmanGraph& sub, const HoffmanGraph& host);

}  // namespace hoffman
