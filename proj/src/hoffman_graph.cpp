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

#include "hoffman/hoffman_graph.hpp"

#include <algorithm>
#include <string>

#include "hoffman/error.hpp"

namespace hoffman {

HoffmanGraph::HoffmanGraph(Graph slim, std::vector<VertexSet> fat_neighbors)
    : slim_(std::move(slim)), fat_adj_(std::move(fat_neighbors)) {
  fats_of_.resize(slim_.order());
  for (int f = 0; f < fat_count(); ++f) {
    if (fat_adj_[f].empty()) {
      throw InputError("fat vertex " + std::to_string(f) +
                       " has no slim neighbour");
    }
    for (int x : fat_adj_[f]) {
      if (x < 0 || x >= slim_.order()) {
        throw InputError("fat vertex " + std::to_string(f) +
                         " is adjacent to unknown slim vertex " +
                         std::to_string(x));
      }
      fats_of_[x].push_back(f);
    }
  }
}

int HoffmanGraph::common_fats(int x, int y) const {
  const auto& a = fats_of_[x];
  const auto& b = fats_of_[y];
  int count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

SpecialMatrix::SpecialMatrix(int dim) : dim_(dim) {
  data_.assign(static_cast<std::size_t>(dim) * dim, 0);
}

SpecialMatrix SpecialMatrix::from_rows(
    const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  SpecialMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InputError("special matrix rows must form a square");
    }
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw InputError("special matrix must be symmetric");
      }
      m.data_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
    }
  }
  return m;
}

void SpecialMatrix::set(int i, int j, int value) {
  data_[static_cast<std::size_t>(i) * dim_ + j] = value;
  data_[static_cast<std::size_t>(j) * dim_ + i] = value;
}

SymMatrix SpecialMatrix::to_sym() const {
  SymMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) out.set(i, j, (*this)(i, j));
  }
  return out;
}

SpecialMatrix SpecialMatrix::principal(std::span<const int> indices) const {
  const int k = static_cast<int>(indices.size());
  SpecialMatrix out(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) out.set(a, b, (*this)(indices[a], indices[b]));
  }
  return out;
}

SpecialMatrix special_matrix(const HoffmanGraph& h) {
  const int n = h.slim_count();
  SpecialMatrix s(n);
  for (int x = 0; x < n; ++x) s.set(x, x, -h.fat_degree(x));
  const auto off = special_off_diagonal(h);
  for (int x = 0; x < n; ++x) {
    for (const auto& [y, value] : off[x]) s.set(x, y, value);
  }
  return s;
}

std::vector<std::vector<std::pair<int, int>>> special_off_diagonal(
    const HoffmanGraph& h) {
  const int n = h.slim_count();
  std::vector<std::vector<std::pair<int, int>>> out(n);
  std::vector<int> common(n, 0);
  std::vector<int> touched;
  for (int x = 0; x < n; ++x) {
    touched.clear();
    for (int f : h.fats_of(x)) {
      for (int y : h.fat_neighbors(f)) {
        if (y == x) continue;
        if (common[y]++ == 0) touched.push_back(y);
      }
    }
    for (int y : h.slim().neighbors(x)) {
      if (common[y] == 0) touched.push_back(y);
    }
    std::sort(touched.begin(), touched.end());
    for (int y : touched) {
      const int value = (h.slim().adjacent(x, y) ? 1 : 0) - common[y];
      if (value != 0) out[x].emplace_back(y, value);
      common[y] = 0;
    }
  }
  return out;
}

double lambda_min(const HoffmanGraph& h) {
  if (h.slim_count() < 1) throw InputError("Hoffman graph has no slim vertex");
  return smallest_eigenvalue(special_matrix(h).to_sym());
}

bool is_t_fat(const HoffmanGraph& h, int t) {
  for (int x = 0; x < h.slim_count(); ++x) {
    if (h.fat_degree(x) < t) return false;
  }
  return true;
}

HoffmanGraph generated_subgraph(const HoffmanGraph& h, const VertexSet& w) {
  if (w.empty()) throw InputError("generated subgraph needs nonempty W");
  std::vector<int> new_index(h.slim_count(), -1);
  int next = 0;
  for (int x : w) {
    if (x < 0 || x >= h.slim_count()) {
      throw InputError("slim vertex " + std::to_string(x) + " out of range");
    }
    new_index[x] = next++;
  }
  Graph slim = induced_subgraph(h.slim(), w);
  std::vector<VertexSet> fats;
  for (int f = 0; f < h.fat_count(); ++f) {
    std::vector<int> nb;
    for (int x : h.fat_neighbors(f)) {
      if (new_index[x] >= 0) nb.push_back(new_index[x]);
    }
    if (!nb.empty()) fats.emplace_back(std::move(nb));
  }
  return HoffmanGraph(std::move(slim), std::move(fats));
}

HoffmanGraph cherry(int t) {
  if (t < 1) throw InputError("cherry needs t >= 1");
  return HoffmanGraph(Graph(1), std::vector<VertexSet>(t, VertexSet{0}));
}

HoffmanGraph clique_expand(const HoffmanGraph& h,
                           const std::map<int, int>& sizes) {
  int total = h.slim_count();
  for (const auto& [f, size] : sizes) {
    if (f < 0 || f >= h.fat_count()) {
      throw InputError("fat vertex " + std::to_string(f) + " does not exist");
    }
    if (size < 1) {
      throw InputError("clique size for fat vertex " + std::to_string(f) +
                       " must be positive");
    }
    total += size;
  }
  Graph slim(total);
  for (const Edge& e : h.slim().edges()) slim.add_edge(e.u, e.v);
  std::vector<VertexSet> kept;
  int next = h.slim_count();
  for (int f = 0; f < h.fat_count(); ++f) {
    auto it = sizes.find(f);
    if (it == sizes.end()) {
      kept.push_back(h.fat_neighbors(f));
      continue;
    }
    const int first = next;
    next += it->second;
    for (int a = first; a < next; ++a) {
      for (int b = a + 1; b < next; ++b) slim.add_edge(a, b);
      for (int x : h.fat_neighbors(f)) slim.add_edge(x, a);
    }
  }
  return HoffmanGraph(std::move(slim), std::move(kept));
}

HoffmanGraph clique_expand_all(const HoffmanGraph& h, int n) {
  std::map<int, int> sizes;
  for (int f = 0; f < h.fat_count(); ++f) sizes[f] = n;
  return clique_expand(h, sizes);
}

Graph slim_graph(const HoffmanGraph& h) { return h.slim(); }

namespace {

std::vector<VertexSet> sorted_neighborhoods(const HoffmanGraph& h) {
  auto out = h.fat_neighborhoods();
  std::sort(out.begin(), out.end());
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const HoffmanGraph& a, const HoffmanGraph& b, long long budget)
      : a_(a),
        b_(b),
        sa_(special_matrix(a)),
        sb_(special_matrix(b)),
        budget_(budget),
        image_(a.slim_count(), -1),
        used_(b.slim_count(), false),
        target_(sorted_neighborhoods(b)) {}

  bool run() { return extend(0); }

 private:
  bool extend(int x) {
    if (++nodes_ > budget_) {
      throw ResourceError("Hoffman isomorphism search exceeded node budget");
    }
    if (x == a_.slim_count()) return fats_match();
    for (int y = 0; y < b_.slim_count(); ++y) {
      if (used_[y] || !consistent(x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      if (extend(x + 1)) return true;
      used_[y] = false;
      image_[x] = -1;
    }
    return false;
  }

  bool consistent(int x, int y) const {
    if (sa_(x, x) != sb_(y, y)) return false;
    if (a_.slim().degree(x) != b_.slim().degree(y)) return false;
    for (int u = 0; u < x; ++u) {
      const int v = image_[u];
      if (a_.slim().adjacent(u, x) != b_.slim().adjacent(v, y)) return false;
      if (sa_(u, x) != sb_(v, y)) return false;
    }
    return true;
  }

  bool fats_match() const {
    std::vector<VertexSet> mapped;
    mapped.reserve(a_.fat_count());
    for (const auto& nb : a_.fat_neighborhoods()) {
      std::vector<int> m;
      for (int x : nb) m.push_back(image_[x]);
      mapped.emplace_back(std::move(m));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == target_;
  }

  const HoffmanGraph& a_;
  const HoffmanGraph& b_;
  SpecialMatrix sa_;
  SpecialMatrix sb_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<VertexSet> target_;
};

template <typename T>
std::vector<T> sorted_copy(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::pair<int, int>> degree_profile(const HoffmanGraph& h) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < h.slim_count(); ++x) {
    out.emplace_back(h.slim().degree(x), h.fat_degree(x));
  }
  return sorted_copy(std::move(out));
}

std::vector<std::size_t> fat_size_profile(const HoffmanGraph& h) {
  std::vector<std::size_t> out;
  for (const auto& nb : h.fat_neighborhoods()) out.push_back(nb.size());
  return sorted_copy(std::move(out));
}

class EmbedSearch {
 public:
  EmbedSearch(const HoffmanGraph& part, const HoffmanGraph& host,
              long long budget)
      : part_(part),
        host_(host),
        budget_(budget),
        image_(part.slim_count(), -1),
        used_(host.slim_count(), false) {}

  bool run() { return extend(0); }

 private:
  bool extend(int x) {
    if (++nodes_ > budget_) {
      throw ResourceError("induced-subgraph search exceeded node budget");
    }
    if (x == part_.slim_count()) return fats_fit();
    for (int y = 0; y < host_.slim_count(); ++y) {
      if (used_[y]) continue;
      if (part_.fat_degree(x) > host_.fat_degree(y)) continue;
      bool ok = true;
      for (int u = 0; u < x && ok; ++u) {
        const int v = image_[u];
        ok = part_.slim().adjacent(u, x) == host_.slim().adjacent(v, y) &&
             part_.common_fats(u, x) <= host_.common_fats(v, y);
      }
      if (!ok) continue;
      image_[x] = y;
      used_[y] = true;
      if (extend(x + 1)) return true;
      used_[y] = false;
      image_[x] = -1;
    }
    return false;
  }

  // Fat vertices of the part, grouped by mapped neighbourhood, must fit into
  // host fat vertices whose neighbourhood restricted to the image is equal.
  bool fats_fit() const {
    std::map<std::vector<int>, int> need;
    for (const auto& nb : part_.fat_neighborhoods()) {
      std::vector<int> m;
      for (int x : nb) m.push_back(image_[x]);
      std::sort(m.begin(), m.end());
      ++need[m];
    }
    std::map<std::vector<int>, int> have;
    for (const auto& nb : host_.fat_neighborhoods()) {
      std::vector<int> m;
      for (int y : nb) {
        if (used_[y]) m.push_back(y);
      }
      if (!m.empty()) ++have[m];
    }
    for (const auto& [key, count] : need) {
      auto it = have.find(key);
      if (it == have.end() || it->second < count) return false;
    }
    return true;
  }

  const HoffmanGraph& part_;
  const HoffmanGraph& host_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

bool hoffman_isomorphic(const HoffmanGraph& a, const HoffmanGraph& b,
                        long long node_budget) {
  if (a.slim_count() != b.slim_count() || a.fat_count() != b.fat_count() ||
      a.slim().size() != b.slim().size()) {
    return false;
  }
  if (degree_profile(a) != degree_profile(b)) return false;
  if (fat_size_profile(a) != fat_size_profile(b)) return false;
  return IsoSearch(a, b, node_budget).run();
}

bool embeds_as_induced(const HoffmanGraph& part, const HoffmanGraph& host,
                       long long node_budget) {
  if (part.slim_count() > host.slim_count() ||
      part.fat_count() > host.fat_count()) {
    return false;
  }
  return EmbedSearch(part, host, node_budget).run();
}

bool fat_submultiset(const HoffmanGraph& sub, const HoffmanGraph& host) {
  if (!(sub.slim() == host.slim())) return false;
  std::map<VertexSet, int> have;
  for (const auto& nb : host.fat_neighborhoods()) ++have[nb];
  for (const auto& nb : sub.fat_neighborhoods()) {
    if (--have[nb] < 0) return false;
  }
  return true;
}

}  // namespace hoffman
