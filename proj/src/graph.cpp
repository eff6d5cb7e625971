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

#include "hoffman/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hoffman/error.hpp"

namespace hoffman {

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(std::vector<int>(members)) {}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("graph order must be non-negative");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  adj_.resize(n);
  bits_.assign(words_ * n, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw InputError("repeated edge {" + std::to_string(u) + "," +
                     std::to_string(v) + "}");
  }
  auto insert_sorted = [](std::vector<int>& list, int x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  for (int v : w) {
    if (v < 0 || v >= g.order()) {
      throw InputError("vertex " + std::to_string(v) +
                       " of W is not a vertex of G");
    }
  }
  const auto& m = w.members();
  Graph out(static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (g.adjacent(m[i], m[j])) {
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

Graph local_graph(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) {
    throw InputError("vertex " + std::to_string(x) + " out of range");
  }
  return induced_subgraph(g, VertexSet(g.neighbors(x)));
}

Rational average_local_degree(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) {
    throw InputError("vertex " + std::to_string(x) + " out of range");
  }
  const auto& nb = g.neighbors(x);
  if (nb.empty()) return {0, 1};
  long long twice_edges = 0;
  for (int u : nb) {
    for (int v : nb) {
      if (u < v && g.adjacent(u, v)) twice_edges += 2;
    }
  }
  return Rational::make(twice_edges, static_cast<long long>(nb.size()));
}

bool is_p_plex(const Graph& g, const VertexSet& w, int p) {
  if (p < 1) throw InputError("plex parameter p must be positive");
  if (w.empty()) throw InputError("plex vertex set must be nonempty");
  for (int v : w) {
    if (v < 0 || v >= g.order()) {
      throw InputError("vertex " + std::to_string(v) + " out of range");
    }
  }
  const long long need = static_cast<long long>(w.size()) - p;
  for (int v : w) {
    long long inside = 0;
    for (int u : w) inside += g.adjacent(u, v) ? 1 : 0;
    if (inside < need) return false;
  }
  return true;
}

namespace {

// Branch and bound over include/exclude decisions. Subsets of a p-plex are
// p-plexes, so a candidate that clashes with the current set can be dropped
// for the whole subtree.
class PlexSearch {
 public:
  PlexSearch(const Graph& g, int p, long long budget)
      : g_(g), p_(p), budget_(budget), miss_(g.order(), 0) {}

  int run() {
    std::vector<int> candidates(g_.order());
    std::iota(candidates.begin(), candidates.end(), 0);
    best_ = g_.order() > 0 ? 1 : 0;
    search(candidates);
    return best_;
  }

 private:
  bool compatible(int w) const {
    int missing = 0;
    for (int s : current_) {
      if (!g_.adjacent(s, w)) {
        if (miss_[s] + 1 > p_ - 1) return false;
        ++missing;
      }
    }
    return missing <= p_ - 1;
  }

  void search(const std::vector<int>& candidates) {
    if (++nodes_ > budget_) {
      throw ResourceError("plex search exceeded node budget");
    }
    best_ = std::max(best_, static_cast<int>(current_.size()));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current_.size() + (candidates.size() - i) <=
          static_cast<std::size_t>(best_)) {
        return;
      }
      const int v = candidates[i];
      // A vertex in a plex of order best_+1 needs degree >= best_+1-p.
      if (g_.degree(v) < best_ + 1 - p_) continue;
      for (int s : current_) {
        if (!g_.adjacent(s, v)) ++miss_[s];
      }
      int own = 0;
      for (int s : current_) own += g_.adjacent(s, v) ? 0 : 1;
      miss_[v] = own;
      current_.push_back(v);

      std::vector<int> next;
      next.reserve(candidates.size() - i - 1);
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (compatible(candidates[j])) next.push_back(candidates[j]);
      }
      search(next);

      current_.pop_back();
      miss_[v] = 0;
      for (int s : current_) {
        if (!g_.adjacent(s, v)) --miss_[s];
      }
    }
  }

  const Graph& g_;
  int p_;
  long long budget_;
  long long nodes_ = 0;
  int best_ = 0;
  std::vector<int> current_;
  std::vector<int> miss_;
};

}  // namespace

int max_plex_order(const Graph& g, int p, long long node_budget) {
  if (p < 1) throw InputError("plex parameter p must be positive");
  return PlexSearch(g, p, node_budget).run();
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

}  // namespace hoffman
