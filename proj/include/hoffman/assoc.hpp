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

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hoffman/graph.hpp"
#include "hoffman/hoffman_graph.hpp"

namespace hoffman {

/// All maximal cliques with at least `min_size` vertices, each sorted, the
/// list sorted lexicographically (Bron–Kerbosch with Tomita pivoting).
/// Throws ResourceError once more than `budget` cliques have been found.
std::vector<VertexSet> maximal_cliques(const Graph& g, int min_size = 1,
                                       long long budget = 1'000'000);

/// Each vertex of c1 has at most m-1 non-neighbours in c2 and vice versa.
bool cliques_equivalent(const Graph& g, const VertexSet& c1,
                        const VertexSet& c2, int m);

/// An equivalence class of large maximal cliques.
struct CliqueClass {
  std::vector<VertexSet> members;  // sorted; members[representative] is least
  int representative = 0;
  /// False when the class was produced by transitive closure over pairs that
  /// are not directly related (relaxed mode only).
  bool transitive = true;
};

enum class ClassMode {
  strict,   // requires n >= (m+1)^2 and asserts the relation is transitive
  relaxed,  // any n; takes the transitive closure and flags it
};

/// Classes of maximal cliques of order >= n under the relation above.
/// Strict mode throws InputError if n < (m+1)^2 and std::logic_error if the
/// relation turns out not to be transitive.
std::vector<CliqueClass> clique_classes(const Graph& g, int m, int n,
                                        ClassMode mode = ClassMode::strict);

struct QuasiClique {
  VertexSet vertices;
  /// Whether every member clique of the class yields the same vertex set.
  bool members_agree = true;
};

/// Vertices with at most m-1 non-neighbours in the representative clique.
QuasiClique quasi_clique(const Graph& g, const CliqueClass& cls, int m);

/// Graph on 2m+1 vertices: K_{2m} on 0..2m-1 plus vertex 2m adjacent to
/// exactly 0..m-1.
Graph k_tilde(int m);

/// Vertices of an induced copy of k_tilde(m) (clique part, then the extra
/// vertex), if G has one.
std::optional<std::vector<int>> find_induced_k_tilde(const Graph& g, int m);

/// Smallest m <= m_budget whose k_tilde(m) has smallest eigenvalue below
/// -t-1. Throws ResourceError if there is none.
int m_of_t(int t, int m_budget = 64);

/// Everything produced while building the associated Hoffman graph.
struct AssociatedHoffman {
  HoffmanGraph graph;  // slim graph G, one fat vertex per clique class
  std::vector<CliqueClass> classes;
  std::vector<QuasiClique> quasi_cliques;
  std::size_t clique_count = 0;  // maximal cliques of order >= n
  std::vector<std::string> warnings;
};

/// Throws InputError naming the vertices of an induced k_tilde(m) if G has
/// one.
AssociatedHoffman associate(const Graph& g, int m, int n,
                            ClassMode mode = ClassMode::strict);

HoffmanGraph associated_hoffman(const Graph& g, int m, int n,
                                ClassMode mode = ClassMode::strict);

struct QuasiCliqueReport {
  /// Per quasi-clique: max over x in Q of |Q| - 1 - deg_Q(x).
  std::vector<int> complement_degree;
  /// Nonempty pairwise intersections (i < j, size).
  std::vector<std::tuple<int, int, int>> intersections;
  int max_complement_degree = 0;
  int max_intersection = 0;
  bool complement_ok = true;    // every complement degree <= t^2
  bool intersection_ok = true;  // every intersection <= t
};

QuasiCliqueReport quasi_clique_conditions(const Graph& g,
                                          const std::vector<QuasiClique>& qs,
                                          int t);

/// Runs `associate` and reports on its quasi-cliques.
QuasiCliqueReport quasi_clique_conditions(const Graph& g, int m, int n, int t);

}  // namespace hoffman
