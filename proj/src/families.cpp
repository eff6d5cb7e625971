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


#include "hoffman/families.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hoffman/error.hpp"

namespace hoffman {

namespace {

void check_budget(long long n, const std::string& what) {
  if (n > kFamilyBudget) {
    throw ResourceError(what + " has " + std::to_string(n) +
                        " vertices, above the budget of " +
                        std::to_string(kFamilyBudget));
  }
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Spectrum merged(const std::map<long long, long long>& mult) {
  Spectrum s;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    if (it->second > 0) {
      s.pairs.emplace_back(static_cast<double>(it->first),
                           static_cast<int>(it->second));
    }
  }
  return s;
}

}  // namespace

Graph hamming(int d, int q) {
  if (d < 1 || q < 2) throw InputError("hamming needs D >= 1 and q >= 2");
  long long n = 1;
  for (int i = 0; i < d && n <= kFamilyBudget; ++i) n *= q;
  check_budget(n, "H(" + std::to_string(d) + "," + std::to_string(q) + ")");
  Graph g(static_cast<int>(n));
  long long place = 1;
  for (int c = 0; c < d; ++c, place *= q) {
    for (long long x = 0; x < n; ++x) {
      long long digit = (x / place) % q;
      for (long long other = digit + 1; other < q; ++other) {
        g.add_edge(static_cast<int>(x),
                   static_cast<int>(x + (other - digit) * place));
      }
    }
  }
  return g;
}

Graph johnson(int v, int p) {
  if (p < 1 || v < 2 * p) throw InputError("johnson needs p >= 1, v >= 2p");
  if (v > 63) throw ResourceError("johnson supports v <= 63");
  check_budget(binomial(v, p),
               "J(" + std::to_string(v) + "," + std::to_string(p) + ")");
  // colex order: sets ranked by their bitmask value
  std::vector<unsigned long long> sets;
  std::vector<int> pick(p);
  for (int i = 0; i < p; ++i) pick[i] = i;
  while (true) {
    unsigned long long mask = 0;
    for (int x : pick) mask |= 1ull << x;
    sets.push_back(mask);
    int i = p - 1;
    while (i >= 0 && pick[i] == v - p + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(sets.begin(), sets.end());
  int n = static_cast<int>(sets.size());
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (__builtin_popcountll(sets[a] & sets[b]) == p - 1) g.add_edge(a, b);
    }
  }
  return g;
}

Graph grid(int t1, int t2) {
  if (t1 < 2 || t2 < 2) throw InputError("grid needs t1, t2 >= 2");
  check_budget(static_cast<long long>(t1) * t2, "grid");
  Graph g(t1 * t2);
  for (int i = 0; i < t1; ++i) {
    for (int j = 0; j < t2; ++j) {
      for (int k = j + 1; k < t2; ++k) g.add_edge(i * t2 + j, i * t2 + k);
      for (int k = i + 1; k < t1; ++k) g.add_edge(i * t2 + j, k * t2 + j);
    }
  }
  return g;
}

Graph clique_extension_2(const Graph& g) {
  int n = g.order();
  check_budget(2LL * n, "2-clique extension");
  Graph out(2 * n);
  for (int v = 0; v < n; ++v) out.add_edge(v, v + n);
  for (const Edge& e : g.edges()) {
    out.add_edge(e.u, e.v);
    out.add_edge(e.u + n, e.v + n);
    out.add_edge(e.u, e.v + n);
    out.add_edge(e.u + n, e.v);
  }
  return out;
}

Graph line_graph(const Graph& g) {
  auto es = g.edges();
  int n = static_cast<int>(es.size());
  check_budget(n, "line graph");
  Graph out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (es[a].u == es[b].u || es[a].u == es[b].v || es[a].v == es[b].u ||
          es[a].v == es[b].v) {
        out.add_edge(a, b);
      }
    }
  }
  return out;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

Graph intersection_graph(const Hypergraph& h) {
  int n = static_cast<int>(h.edges.size());
  std::vector<std::vector<int>> at(h.vertex_count);
  for (int e = 0; e < n; ++e) {
    if (h.edges[e].empty()) throw InputError("hypergraph edge is empty");
    for (int x : h.edges[e]) {
      if (x < 0 || x >= h.vertex_count) {
        throw InputError("hypergraph edge member out of range");
      }
      at[x].push_back(e);
    }
  }
  Graph g(n);
  for (const auto& list : at) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (!g.adjacent(list[i], list[j])) g.add_edge(list[i], list[j]);
      }
    }
  }
  return g;
}

bool is_linear_uniform(const Hypergraph& hg, int h) {
  if (h < 2) throw InputError("uniformity must be at least 2");
  std::map<std::pair<int, int>, int> seen;
  for (const auto& e : hg.edges) {
    if (static_cast<int>(e.size()) != h) return false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (++seen[{e[i], e[j]}] > 1) return false;
      }
    }
  }
  return true;
}

Hypergraph hypergraph_from_cover(const HoffmanGraph& h, int t) {
  for (int x = 0; x < h.slim_count(); ++x) {
    if (h.fat_degree(x) != t + 1) {
      throw InputError("slim vertex " + std::to_string(x) + " has " +
                       std::to_string(h.fat_degree(x)) +
                       " fat neighbours, expected " + std::to_string(t + 1));
    }
  }
  Hypergraph out;
  out.vertex_count = h.fat_count();
  for (int x = 0; x < h.slim_count(); ++x) {
    out.edges.emplace_back(h.fats_of(x));
  }
  // pairs sharing a fat vertex
  std::map<std::pair<int, int>, int> shared;
  for (int f = 0; f < h.fat_count(); ++f) {
    const auto& nb = h.fat_neighbors(f);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int c = ++shared[{nb[i], nb[j]}];
        if (c > 1) {
          throw InputError("slim vertices " + std::to_string(nb[i]) + " and " +
                           std::to_string(nb[j]) + " share " +
                           std::to_string(c) + " fat neighbours");
        }
      }
    }
  }
  for (const auto& [pair, c] : shared) {
    if (!h.slim().adjacent(pair.first, pair.second)) {
      throw InputError("slim vertices " + std::to_string(pair.first) + " and " +
                       std::to_string(pair.second) +
                       " share a fat neighbour but are not adjacent");
    }
  }
  if (shared.size() != h.slim().size()) {
    for (const Edge& e : h.slim().edges()) {
      if (!shared.count({e.u, e.v})) {
        throw InputError("adjacent slim vertices " + std::to_string(e.u) +
                         " and " + std::to_string(e.v) +
                         " share no fat neighbour");
      }
    }
  }
  if (!is_linear_uniform(out, t + 1) || !(intersection_graph(out) == h.slim())) {
    throw std::logic_error("hypergraph extraction postcondition failed");
  }
  return out;
}

std::string to_string(const FamilySpec& spec) {
  std::string a = std::to_string(spec.a), b = std::to_string(spec.b);
  switch (spec.family) {
    case Family::hamming: return "H(" + a + "," + b + ")";
    case Family::johnson: return "J(" + a + "," + b + ")";
    case Family::grid: return "grid(" + a + "," + b + ")";
    case Family::grid_2clique: return "grid2(" + a + "," + b + ")";
  }
  return "?";
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::hamming: return hamming(spec.a, spec.b);
    case Family::johnson: return johnson(spec.a, spec.b);
    case Family::grid: return grid(spec.a, spec.b);
    case Family::grid_2clique: return clique_extension_2(grid(spec.a, spec.b));
  }
  throw InputError("unsupported family");
}

Spectrum family_spectrum(const FamilySpec& spec) {
  std::map<long long, long long> mult;
  int a = spec.a, b = spec.b;
  switch (spec.family) {
    case Family::hamming: {
      if (a < 1 || b < 2) throw InputError("hamming needs D >= 1 and q >= 2");
      for (int i = 0; i <= a; ++i) {
        mult[static_cast<long long>(b) * (a - i) - a] +=
            binomial(a, i) * ipow(b - 1, i);
      }
      break;
    }
    case Family::johnson: {
      if (b < 1 || a < 2 * b) throw InputError("johnson needs p >= 1, v >= 2p");
      for (int i = 0; i <= b; ++i) {
        mult[static_cast<long long>(b - i) * (a - b - i) - i] +=
            binomial(a, i) - binomial(a, i - 1);
      }
      break;
    }
    case Family::grid:
    case Family::grid_2clique: {
      if (a < 2 || b < 2) throw InputError("grid needs t1, t2 >= 2");
      std::map<long long, long long> base;
      base[a + b - 2] += 1;
      base[a - 2] += b - 1;
      base[b - 2] += a - 1;
      base[-2] += static_cast<long long>(a - 1) * (b - 1);
      if (spec.family == Family::grid) {
        mult = base;
      } else {
        for (auto [l, k] : base) mult[2 * l + 1] += k;
        mult[-1] += static_cast<long long>(a) * b;
      }
      break;
    }
    default:
      throw InputError("unsupported family");
  }
  return merged(mult);
}

}  // namespace hoffman
