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

#include <cmath>
#include <random>
#include <vector>

#include "hoffman/graph.hpp"
#include "hoffman/hoffman_graph.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman::testing {

using Rng = std::mt19937_64;

inline Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline VertexSet random_subset(int n, Rng& rng, bool nonempty = true) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (coin(rng)) out.push_back(v);
  }
  if (out.empty() && nonempty && n > 0) {
    out.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
  }
  return VertexSet(std::move(out));
}

inline HoffmanGraph random_hoffman(int slim, int fat, double p, Rng& rng) {
  Graph g = random_graph(slim, p, rng);
  std::vector<VertexSet> fats;
  for (int f = 0; f < fat; ++f) fats.push_back(random_subset(slim, rng));
  return HoffmanGraph(g, fats);
}

// Tops up fat vertices until every slim vertex has at least t of them.
inline HoffmanGraph random_t_fat(int slim, int t, Rng& rng) {
  Graph g = random_graph(slim, 0.5, rng);
  std::vector<VertexSet> fats;
  std::vector<int> deg(slim, 0);
  std::bernoulli_distribution coin(0.35);
  for (int x = 0; x < slim; ++x) {
    while (deg[x] < t) {
      std::vector<int> nb{x};
      for (int y = 0; y < slim; ++y) {
        if (y != x && coin(rng)) nb.push_back(y);
      }
      for (int y : nb) ++deg[y];
      fats.emplace_back(std::move(nb));
    }
  }
  return HoffmanGraph(g, fats);
}

// Determinant by Gaussian elimination with partial pivoting.
inline double determinant(std::vector<std::vector<double>> a) {
  int n = static_cast<int>(a.size());
  double det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (a[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

inline std::vector<std::vector<double>> dense(const SymMatrix& m) {
  std::vector<std::vector<double>> out(m.dim(), std::vector<double>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

}  // namespace hoffman::testing
