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

#include "hoffman/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "hoffman/error.hpp"

namespace hoffman {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw InputError("matrix dimension must be non-negative");
  data_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InputError("matrix rows must form a square");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw InputError("matrix is not symmetric at (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
      }
      m.data_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
    }
  }
  return m;
}

void SymMatrix::set(int i, int j, double value) {
  data_[static_cast<std::size_t>(i) * dim_ + j] = value;
  data_[static_cast<std::size_t>(j) * dim_ + i] = value;
}

SymMatrix SymMatrix::principal(std::span<const int> indices) const {
  const int k = static_cast<int>(indices.size());
  SymMatrix out(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) out.set(a, b, (*this)(indices[a], indices[b]));
  }
  return out;
}

int Spectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& [value, mult] : pairs) total += mult;
  return total;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

namespace {

void check_finite(const SymMatrix& m) {
  for (double x : m.data()) {
    if (!std::isfinite(x)) throw InputError("matrix has non-finite entries");
  }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const SymMatrix& m) {
  check_finite(m);
  const int n = m.dim();
  if (n < 1) throw InputError("eigenvalues need dimension >= 1");
  // only the strict upper triangle of `a` is kept current
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  std::vector<double> d(n), b(n), z(n, 0.0);
  for (int i = 0; i < n; ++i) b[i] = d[i] = at(i, i);

  double norm2 = 0.0;
  for (double x : a) norm2 += x * x;
  const double threshold = 1e-12 * std::sqrt(norm2);

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 1; sweep <= kMaxSweeps + 1; ++sweep) {
    double off2 = 0.0, off1 = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        off2 += 2.0 * at(p, q) * at(p, q);
        off1 += std::abs(at(p, q));
      }
    }
    if (std::sqrt(off2) <= threshold) {
      converged = true;
      break;
    }
    if (sweep > kMaxSweeps) break;
    // skip small entries early on
    const double skip = sweep < 4 ? 0.2 * off1 / (static_cast<double>(n) * n) : 0.0;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) &&
            std::abs(d[q]) + g == std::abs(d[q])) {
          at(p, q) = 0.0;
          continue;
        }
        if (std::abs(apq) <= skip) continue;
        const double h = d[q] - d[p];
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double shift = t * apq;
        z[p] -= shift;
        z[q] += shift;
        d[p] -= shift;
        d[q] += shift;
        at(p, q) = 0.0;
        auto rotate = [&](double& x, double& y) {
          const double gx = x, hy = y;
          x = gx - s * (hy + gx * tau);
          y = hy + s * (gx - hy * tau);
        };
        for (int j = 0; j < p; ++j) rotate(at(j, p), at(j, q));
        for (int j = p + 1; j < q; ++j) rotate(at(p, j), at(j, q));
        for (int j = q + 1; j < n; ++j) rotate(at(p, j), at(q, j));
      }
    }
    for (int i = 0; i < n; ++i) {
      b[i] += z[i];
      d[i] = b[i];
      z[i] = 0.0;
    }
  }
  if (!converged) {
    throw ResourceError("Jacobi eigensolver did not converge in 100 sweeps");
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<double> eigenvalues(const SymMatrix& m) {
  if (m.dim() <= kJacobiMaxDim) return jacobi_eigenvalues(m);
  check_finite(m);
  const int n = m.dim();
  Eigen::Map<const Eigen::MatrixXd> view(m.data().data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      view, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ResourceError("dense eigensolver did not converge");
  }
  std::vector<double> eig(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + n);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

double smallest_eigenvalue(const SymMatrix& m) { return eigenvalues(m).back(); }

Spectrum group_spectrum(std::span<const double> descending, double group_tol) {
  if (!(group_tol > 0)) throw InputError("grouping tolerance must be positive");
  Spectrum out;
  std::size_t i = 0;
  while (i < descending.size()) {
    std::size_t j = i + 1;
    double sum = descending[i];
    while (j < descending.size() &&
           descending[j - 1] - descending[j] <= group_tol) {
      sum += descending[j];
      ++j;
    }
    const int mult = static_cast<int>(j - i);
    out.pairs.emplace_back(sum / mult, mult);
    i = j;
  }
  return out;
}

Spectrum spectrum(const Graph& g, double group_tol) {
  if (g.order() == 0) return {};
  const auto eig = eigenvalues(adjacency_matrix(g));
  return group_spectrum(eig, group_tol);
}

bool is_cospectral(const Graph& a, const Graph& b, double tol) {
  if (!(tol > 0)) throw InputError("cospectrality tolerance must be positive");
  if (a.order() != b.order()) return false;
  if (a.order() == 0) return true;
  const auto ea = eigenvalues(adjacency_matrix(a));
  const auto eb = eigenvalues(adjacency_matrix(b));
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (std::abs(ea[i] - eb[i]) > tol) return false;
  }
  return true;
}

namespace {

// Edge counts between cells, e[i][j] = sum over v in cell i of |N(v) ∩ cell j|.
std::vector<std::vector<long long>> cell_edge_counts(
    const Graph& g, const std::vector<VertexSet>& cells) {
  const int r = static_cast<int>(cells.size());
  std::vector<int> cell_of(g.order(), -1);
  for (int i = 0; i < r; ++i) {
    if (cells[i].empty()) throw InputError("quotient cells must be nonempty");
    for (int v : cells[i]) {
      if (v < 0 || v >= g.order()) {
        throw InputError("cell vertex " + std::to_string(v) + " out of range");
      }
      if (cell_of[v] != -1) {
        throw InputError("vertex " + std::to_string(v) +
                         " lies in two cells");
      }
      cell_of[v] = i;
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (cell_of[v] == -1) {
      throw InputError("vertex " + std::to_string(v) + " is in no cell");
    }
  }
  std::vector<std::vector<long long>> e(r, std::vector<long long>(r, 0));
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbors(v)) ++e[cell_of[v]][cell_of[u]];
  }
  return e;
}

}  // namespace

Matrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& cells) {
  const auto e = cell_edge_counts(g, cells);
  const int r = static_cast<int>(cells.size());
  Matrix b{r, r, std::vector<double>(static_cast<std::size_t>(r) * r, 0.0)};
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      b(i, j) = static_cast<double>(e[i][j]) /
                static_cast<double>(cells[i].size());
    }
  }
  return b;
}

std::vector<double> quotient_eigenvalues(const Graph& g,
                                         const std::vector<VertexSet>& cells) {
  const auto e = cell_edge_counts(g, cells);
  const int r = static_cast<int>(cells.size());
  SymMatrix m(r);
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      m.set(i, j,
            static_cast<double>(e[i][j]) /
                std::sqrt(static_cast<double>(cells[i].size()) *
                          static_cast<double>(cells[j].size())));
    }
  }
  return eigenvalues(m);
}

bool interlaces(std::span<const double> sub, std::span<const double> sup,
                double tol) {
  auto check_sorted = [](std::span<const double> xs, const char* name) {
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (xs[i] > xs[i - 1]) {
        throw InputError(std::string(name) + " is not sorted descending");
      }
    }
  };
  check_sorted(sub, "sub eigenvalue list");
  check_sorted(sup, "sup eigenvalue list");
  if (sub.size() > sup.size()) {
    throw InputError("interlacing needs |sub| <= |sup|");
  }
  const std::size_t n = sup.size();
  const std::size_t m = sub.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (sub[i] > sup[i] + tol) return false;
    if (sub[i] < sup[n - m + i] - tol) return false;
  }
  return true;
}

double plex_bound(int n, int k, double theta2, int p) {
  if (!(n > k && k >= 1)) throw InputError("plex bound needs n > k >= 1");
  if (p < 0) throw InputError("plex bound needs p >= 0");
  const double denom = n - k + theta2;
  if (!(denom > 0)) throw InputError("plex bound denominator n-k+theta2 <= 0");
  return n * (p + 1 + theta2) / denom;
}

double avg_local_degree_from_spectrum(int n, int k, double l1, double l2,
                                      double l3) {
  if (k == 0) throw InputError("degree k must be nonzero");
  if (n <= 0) throw InputError("order n must be positive");
  return l1 + l2 + l3 + l1 * l2 * l3 / k +
         (k - l1) * (k - l2) * (k - l3) / (static_cast<double>(n) * k);
}

}  // namespace hoffman
