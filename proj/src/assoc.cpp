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


#include "hoffman/assoc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hoffman/error.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int min_size, long long budget)
      : g_(g), min_size_(min_size), budget_(budget) {}

  std::vector<VertexSet> run() {
    std::vector<int> p(g_.order());
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> r;
    expand(r, p, {});
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  std::vector<int> filter(const std::vector<int>& s, int v) const {
    std::vector<int> res;
    for (int w : s) {
      if (g_.adjacent(v, w)) res.push_back(w);
    }
    return res;
  }

  void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
    if (p.empty()) {
      if (x.empty() && static_cast<int>(r.size()) >= min_size_) {
        if (static_cast<long long>(out_.size()) >= budget_) {
          throw ResourceError("maximal clique budget exceeded");
        }
        out_.emplace_back(r);
      }
      return;
    }
    if (static_cast<int>(r.size() + p.size()) < min_size_) return;

    // Tomita pivot
    int pivot = -1;
    int best = -1;
    auto consider = [&](int u) {
      int c = 0;
      for (int w : p) c += g_.adjacent(u, w);
      if (c > best) {
        best = c;
        pivot = u;
      }
    };
    for (int u : p) consider(u);
    for (int u : x) consider(u);

    std::vector<int> branch;
    for (int v : p) {
      if (!g_.adjacent(pivot, v)) branch.push_back(v);
    }
    for (int v : branch) {
      r.push_back(v);
      expand(r, filter(p, v), filter(x, v));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
      if (static_cast<int>(r.size() + p.size()) < min_size_) return;
    }
  }

  const Graph& g_;
  int min_size_;
  long long budget_;
  std::vector<VertexSet> out_;
};

int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

VertexSet quasi_from(const Graph& g, const VertexSet& c, int m) {
  std::vector<int> hits(g.order(), 0);
  for (int v : c) {
    for (int w : g.neighbors(v)) ++hits[w];
  }
  std::vector<int> out;
  int size = static_cast<int>(c.size());
  for (int x = 0; x < g.order(); ++x) {
    int missing = c.contains(x) ? size - 1 - hits[x] : size - hits[x];
    if (missing <= m - 1) out.push_back(x);
  }
  return VertexSet(std::move(out));
}

// Looks for an s-clique inside `cand`; appends it to `out`.
bool clique_of_size(const Graph& g, const std::vector<int>& cand, int s,
                    std::vector<int>& out) {
  if (s == 0) return true;
  if (static_cast<int>(cand.size()) < s) return false;
  for (std::size_t i = 0; i + s <= cand.size(); ++i) {
    std::vector<int> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
    }
    out.push_back(cand[i]);
    if (clique_of_size(g, next, s - 1, out)) return true;
    out.pop_back();
  }
  return false;
}

bool pick_inner(const Graph& g, int m, const std::vector<int>& inner,
                const std::vector<int>& outer, std::vector<int>& a,
                std::vector<int>& b) {
  if (!a.empty() && static_cast<int>(outer.size()) < m) return false;
  if (static_cast<int>(a.size()) == m) return clique_of_size(g, outer, m, b);
  int need = m - static_cast<int>(a.size());
  for (std::size_t i = 0; i + need <= inner.size(); ++i) {
    int v = inner[i];
    std::vector<int> next_inner;
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      if (g.adjacent(v, inner[j])) next_inner.push_back(inner[j]);
    }
    std::vector<int> next_outer;
    for (int w : outer) {
      if (g.adjacent(v, w)) next_outer.push_back(w);
    }
    if (a.empty()) {
      // outer holds just the apex; start from the neighbours of v instead
      next_outer.clear();
      int apex = outer.front();
      for (int w : g.neighbors(v)) {
        if (w != apex && !g.adjacent(apex, w)) next_outer.push_back(w);
      }
    }
    a.push_back(v);
    if (pick_inner(g, m, next_inner, next_outer, a, b)) return true;
    a.pop_back();
  }
  return false;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, int min_size,
                                       long long budget) {
  return CliqueSearch(g, std::max(min_size, 1), budget).run();
}

bool cliques_equivalent(const Graph& g, const VertexSet& c1,
                        const VertexSet& c2, int m) {
  auto one_side = [&](const VertexSet& a, const VertexSet& b) {
    for (int x : a) {
      int missing = 0;
      for (int y : b) {
        if (y != x && !g.adjacent(x, y) && ++missing > m - 1) return false;
      }
    }
    return true;
  };
  return one_side(c1, c2) && one_side(c2, c1);
}

std::vector<CliqueClass> clique_classes(const Graph& g, int m, int n,
                                        ClassMode mode) {
  if (m < 1) throw InputError("m must be positive");
  if (mode == ClassMode::strict && n < (m + 1) * (m + 1)) {
    throw InputError("strict mode needs n >= (m+1)^2, got n = " +
                     std::to_string(n) + ", m = " + std::to_string(m));
  }
  auto cliques = maximal_cliques(g, n);
  int c = static_cast<int>(cliques.size());
  std::vector<int> parent(c);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<int, int>> related;
  for (int i = 0; i < c; ++i) {
    for (int j = i + 1; j < c; ++j) {
      if (cliques_equivalent(g, cliques[i], cliques[j], m)) {
        related.emplace_back(i, j);
        parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < c; ++i) groups[find_root(parent, i)].push_back(i);

  std::vector<CliqueClass> out;
  for (auto& [root, idx] : groups) {
    CliqueClass cls;
    for (int i : idx) cls.members.push_back(cliques[i]);
    cls.representative = 0;  // cliques are already sorted
    std::size_t pairs = idx.size() * (idx.size() - 1) / 2;
    std::size_t direct = 0;
    for (auto [i, j] : related) {
      if (find_root(parent, i) == root) ++direct;
    }
    cls.transitive = direct == pairs;
    if (!cls.transitive && mode == ClassMode::strict) {
      throw std::logic_error("clique relation is not transitive");
    }
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.members[a.representative] < b.members[b.representative];
  });
  return out;
}

QuasiClique quasi_clique(const Graph& g, const CliqueClass& cls, int m) {
  if (cls.members.empty()) throw InputError("empty clique class");
  QuasiClique q;
  q.vertices = quasi_from(g, cls.members[cls.representative], m);
  for (std::size_t i = 0; i < cls.members.size(); ++i) {
    if (static_cast<int>(i) == cls.representative) continue;
    if (quasi_from(g, cls.members[i], m) != q.vertices) {
      q.members_agree = false;
      break;
    }
  }
  return q;
}

Graph k_tilde(int m) {
  if (m < 1) throw InputError("k_tilde needs m >= 1");
  Graph g(2 * m + 1);
  for (int i = 0; i < 2 * m; ++i) {
    for (int j = i + 1; j < 2 * m; ++j) g.add_edge(i, j);
  }
  for (int i = 0; i < m; ++i) g.add_edge(i, 2 * m);
  return g;
}

std::optional<std::vector<int>> find_induced_k_tilde(const Graph& g, int m) {
  if (m < 1) throw InputError("k_tilde needs m >= 1");
  for (int v = 0; v < g.order(); ++v) {
    const auto& inner = g.neighbors(v);
    if (static_cast<int>(inner.size()) < m) continue;
    std::vector<int> apex{v};
    std::vector<int> a, b;
    if (pick_inner(g, m, inner, apex, a, b)) {
      a.insert(a.end(), b.begin(), b.end());
      a.push_back(v);
      return a;
    }
  }
  return std::nullopt;
}

int m_of_t(int t, int m_budget) {
  if (t < 1) throw InputError("t must be positive");
  for (int m = 1; m <= m_budget; ++m) {
    if (smallest_eigenvalue(adjacency_matrix(k_tilde(m))) < -t - 1) return m;
  }
  throw ResourceError("m(t) not found within m <= " + std::to_string(m_budget));
}

AssociatedHoffman associate(const Graph& g, int m, int n, ClassMode mode) {
  if (auto w = find_induced_k_tilde(g, m)) {
    std::string names;
    for (int v : *w) names += (names.empty() ? "" : " ") + std::to_string(v);
    throw InputError("graph contains an induced k_tilde(" + std::to_string(m) +
                     ") on vertices " + names);
  }
  AssociatedHoffman out;
  out.clique_count = maximal_cliques(g, n).size();
  out.classes = clique_classes(g, m, n, mode);
  std::vector<VertexSet> fats;
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    const auto& cls = out.classes[i];
    if (!cls.transitive) {
      out.warnings.push_back("class " + std::to_string(i) +
                             " closed transitively");
    }
    auto q = quasi_clique(g, cls, m);
    if (!q.members_agree) {
      out.warnings.push_back("class " + std::to_string(i) +
                             ": members give different quasi-cliques");
    }
    fats.push_back(q.vertices);
    out.quasi_cliques.push_back(std::move(q));
  }
  out.graph = HoffmanGraph(g, std::move(fats));
  return out;
}

HoffmanGraph associated_hoffman(const Graph& g, int m, int n, ClassMode mode) {
  return associate(g, m, n, mode).graph;
}

QuasiCliqueReport quasi_clique_conditions(const Graph& g,
                                          const std::vector<QuasiClique>& qs,
                                          int t) {
  QuasiCliqueReport rep;
  std::vector<char> in(g.order(), 0);
  std::vector<std::vector<int>> owners(g.order());
  for (int i = 0; i < static_cast<int>(qs.size()); ++i) {
    const auto& q = qs[i].vertices;
    for (int x : q) in[x] = 1;
    int worst = 0;
    for (int x : q) {
      int deg = 0;
      for (int w : g.neighbors(x)) deg += in[w];
      worst = std::max(worst, static_cast<int>(q.size()) - 1 - deg);
      owners[x].push_back(i);
    }
    for (int x : q) in[x] = 0;
    rep.complement_degree.push_back(worst);
    rep.max_complement_degree = std::max(rep.max_complement_degree, worst);
  }
  std::map<std::pair<int, int>, int> meet;
  for (const auto& list : owners) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        ++meet[{list[a], list[b]}];
      }
    }
  }
  for (auto& [key, size] : meet) {
    rep.intersections.emplace_back(key.first, key.second, size);
    rep.max_intersection = std::max(rep.max_intersection, size);
  }
  rep.complement_ok = rep.max_complement_degree <= t * t;
  rep.intersection_ok = rep.max_intersection <= t;
  return rep;
}

QuasiCliqueReport quasi_clique_conditions(const Graph& g, int m, int n, int t) {
  return quasi_clique_conditions(g, associate(g, m, n).quasi_cliques, t);
}

}  // namespace hoffman
