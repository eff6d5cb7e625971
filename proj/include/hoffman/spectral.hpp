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

#include <span>
#include <utility>
#include <vector>

#include "hoffman/graph.hpp"

namespace hoffman {

/// Dense real symmetric matrix. Every write goes to both (i,j) and (j,i).
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim);
  /// Throws InputError unless `rows` is square and exactly symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * dim_ + j];
  }
  void set(int i, int j, double value);
  std::span<const double> data() const { return data_; }

  /// Principal submatrix on `indices` (in the given order).
  SymMatrix principal(std::span<const int> indices) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<double> data_;
};

/// Dense row-major matrix without symmetry; used for quotient matrices.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  double operator()(int i, int j) const {
    return data[static_cast<std::size_t>(i) * cols + j];
  }
  double& operator()(int i, int j) {
    return data[static_cast<std::size_t>(i) * cols + j];
  }
};

/// Eigenvalues grouped as (value, multiplicity), sorted by decreasing value.
struct Spectrum {
  std::vector<std::pair<double, int>> pairs;

  int total_multiplicity() const;
};

SymMatrix adjacency_matrix(const Graph& g);

/// Largest dimension handled by the Jacobi path of `eigenvalues`.
inline constexpr int kJacobiMaxDim = 256;

/// Cyclic Jacobi rotations; stops once the off-diagonal Frobenius norm drops
/// below 1e-12 times the Frobenius norm of the input. Descending order.
/// Throws ResourceError after 100 sweeps.
std::vector<double> jacobi_eigenvalues(const SymMatrix& m);

/// All eigenvalues, descending. Jacobi up to kJacobiMaxDim, otherwise a
/// dense Householder/QR solver.
std::vector<double> eigenvalues(const SymMatrix& m);

double smallest_eigenvalue(const SymMatrix& m);

/// Groups a descending eigenvalue list: consecutive values closer than
/// `group_tol` share a group, represented by its mean.
Spectrum group_spectrum(std::span<const double> descending, double group_tol);

Spectrum spectrum(const Graph& g, double group_tol = 1e-6);

/// Same order and sorted eigenvalues agree elementwise within `tol`.
bool is_cospectral(const Graph& a, const Graph& b, double tol = 1e-6);

/// B[i][j] is the average number of neighbours in cell j of a vertex of
/// cell i. Throws InputError unless `cells` partition V(G) into nonempty sets.
Matrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& cells);

/// Eigenvalues of a quotient matrix via the similar symmetric matrix
/// D^{1/2} B D^{-1/2}, D = diag(cell sizes).
std::vector<double> quotient_eigenvalues(const Graph& g,
                                         const std::vector<VertexSet>& cells);

/// theta_{n-m+i}(sup) <= theta_i(sub) <= theta_i(sup), each within `tol`.
/// Both lists must be sorted descending.
bool interlaces(std::span<const double> sub, std::span<const double> sup,
                double tol = 1e-9);

/// Upper bound n(p+1+theta2)/(n-k+theta2) on the order of a (p+1)-plex in a
/// k-regular graph on n vertices with second eigenvalue theta2.
double plex_bound(int n, int k, double theta2, int p);

/// Average valency of every local graph of a connected k-regular graph on n
/// vertices with exactly four distinct eigenvalues k > l1 > l2 > l3.
double avg_local_degree_from_spectrum(int n, int k, double l1, double l2,
                                      double l3);

}  // namespace hoffman
