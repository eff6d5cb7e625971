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

#include "hoffman/forbidden.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "hoffman/decomp.hpp"
#include "hoffman/error.hpp"

namespace hoffman {

std::string PatternId::name() const {
  const int index = static_cast<int>(kind) + 1;
  if (index <= 4) {
    return "m" + std::to_string(index) + "(" + std::to_string(a) + ")";
  }
  return "m" + std::to_string(index);
}

bool pattern_in_range(const PatternId& p, int t) {
  if (t < 1) return false;
  switch (p.kind) {
    case PatternKind::m1:
      return p.a <= -2;
    case PatternKind::m2:
      return p.a <= -2 && p.a >= -t;
    case PatternKind::m3:
      return p.a == 1 || (p.a <= -1 && p.a >= -t);
    case PatternKind::m4:
      return p.a == 1 || (p.a <= -1 && p.a >= -t - 1);
    default:
      return true;
  }
}

SpecialMatrix pattern_matrix(const PatternId& p, int t) {
  const int d = -t;
  const int a = p.a;
  switch (p.kind) {
    case PatternKind::m1:
      return SpecialMatrix::from_rows({{d + a}});
    case PatternKind::m2:
      return SpecialMatrix::from_rows({{d, a}, {a, d}});
    case PatternKind::m3:
      return SpecialMatrix::from_rows({{d - 1, a}, {a, d}});
    case PatternKind::m4:
      return SpecialMatrix::from_rows({{d - 1, a}, {a, d - 1}});
    case PatternKind::m5:
      return SpecialMatrix::from_rows({{d, -1, -1}, {-1, d, -1}, {-1, -1, d}});
    case PatternKind::m6:
      return SpecialMatrix::from_rows({{d, 1, 1}, {1, d, -1}, {1, -1, d}});
    case PatternKind::m7:
      return SpecialMatrix::from_rows({{d, 0, 1}, {0, d, -1}, {1, -1, d}});
    case PatternKind::m8:
      return SpecialMatrix::from_rows({{d, 0, 1}, {0, d, 1}, {1, 1, d}});
    case PatternKind::m9:
      return SpecialMatrix::from_rows({{d, 0, -1}, {0, d, -1}, {-1, -1, d}});
  }
  throw InputError("unknown pattern");
}

std::vector<PatternId> forbidden_patterns(int t, int m1_count) {
  if (t < 1) throw InputError("t must be positive");
  std::vector<PatternId> out;
  for (int i = 0; i < m1_count; ++i) out.push_back({PatternKind::m1, -2 - i});
  for (int a = -2; a >= -t; --a) out.push_back({PatternKind::m2, a});
  out.push_back({PatternKind::m3, 1});
  for (int a = -1; a >= -t; --a) out.push_back({PatternKind::m3, a});
  out.push_back({PatternKind::m4, 1});
  for (int a = -1; a >= -t - 1; --a) out.push_back({PatternKind::m4, a});
  for (auto kind : {PatternKind::m5, PatternKind::m6, PatternKind::m7,
                    PatternKind::m8, PatternKind::m9}) {
    out.push_back({kind, 0});
  }
  return out;
}

double forbidden_lambda_min(const PatternId& p, int t) {
  if (!pattern_in_range(p, t)) {
    throw InputError("pattern " + p.name() + " is not in the family for t=" +
                     std::to_string(t));
  }
  const double a = p.a;
  switch (p.kind) {
    case PatternKind::m1:
      return -t + a;
    case PatternKind::m2:
      return -t - std::abs(a);
    case PatternKind::m3:
      return -t - (1.0 + std::sqrt(1.0 + 4.0 * a * a)) / 2.0;
    case PatternKind::m4:
      return -t - 1 - std::abs(a);
    case PatternKind::m5:
    case PatternKind::m6:
      return -t - 2.0;
    default:
      return -t - std::sqrt(2.0);
  }
}

namespace {

bool equivalent3(const SpecialMatrix& m, const SpecialMatrix& pattern) {
  std::array<int, 3> perm{0, 1, 2};
  do {
    bool same = true;
    for (int i = 0; i < 3 && same; ++i) {
      for (int j = 0; j < 3 && same; ++j) {
        same = m(perm[i], perm[j]) == pattern(i, j);
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::optional<PatternId> is_forbidden(const SpecialMatrix& m, int t) {
  if (t < 1) throw InputError("t must be positive");
  switch (m.dim()) {
    case 1:
      if (m(0, 0) <= -t - 2) return PatternId{PatternKind::m1, m(0, 0) + t};
      return std::nullopt;
    case 2: {
      const int a = m(0, 1);
      if (a == 0) return std::nullopt;
      const int lo = std::min(m(0, 0), m(1, 1));
      const int hi = std::max(m(0, 0), m(1, 1));
      PatternId id;
      if (lo == -t && hi == -t) {
        id = {PatternKind::m2, a};
      } else if (lo == -t - 1 && hi == -t) {
        id = {PatternKind::m3, a};
      } else if (lo == -t - 1 && hi == -t - 1) {
        id = {PatternKind::m4, a};
      } else {
        return std::nullopt;
      }
      if (pattern_in_range(id, t)) return id;
      return std::nullopt;
    }
    case 3:
      for (auto kind : {PatternKind::m5, PatternKind::m6, PatternKind::m7,
                        PatternKind::m8, PatternKind::m9}) {
        const PatternId id{kind, 0};
        if (equivalent3(m, pattern_matrix(id, t))) return id;
      }
      return std::nullopt;
    default:
      throw InputError("forbidden patterns have dimension 1, 2 or 3");
  }
}

std::vector<ForbiddenHit> scan_forbidden(const SpecialMatrix& s, int t) {
  if (t < 1) throw InputError("t must be positive");
  const int n = s.dim();
  std::vector<std::vector<int>> nonzero(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && s(x, y) != 0) nonzero[x].push_back(y);
    }
  }

  std::vector<ForbiddenHit> hits;
  auto test = [&](std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    if (auto id = is_forbidden(s.principal(idx), t)) {
      hits.push_back({VertexSet(std::move(idx)), *id});
    }
  };

  for (int x = 0; x < n; ++x) test({x});
  for (int x = 0; x < n; ++x) {
    for (int y : nonzero[x]) {
      if (x < y) test({x, y});
    }
  }
  std::set<std::array<int, 3>> triples;
  for (int c = 0; c < n; ++c) {
    const auto& nb = nonzero[c];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        std::array<int, 3> tri{c, nb[i], nb[j]};
        std::sort(tri.begin(), tri.end());
        triples.insert(tri);
      }
    }
  }
  for (const auto& tri : triples) test({tri[0], tri[1], tri[2]});

  std::sort(hits.begin(), hits.end(),
            [](const ForbiddenHit& a, const ForbiddenHit& b) {
              if (a.indices.size() != b.indices.size()) {
                return a.indices.size() < b.indices.size();
              }
              return a.indices < b.indices;
            });
  return hits;
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::minus_t:
      return "minus_t";
    case CaseTag::minus_t_minus_1:
      return "minus_t_minus_1";
    case CaseTag::one_class:
      return "one_class";
    case CaseTag::two_class:
      return "two_class";
    case CaseTag::forbidden:
      return "forbidden";
  }
  return "unknown";
}

ClassificationCase classify_indecomposable(const HoffmanGraph& h, int t) {
  if (t < 1) throw InputError("t must be positive");
  if (!is_t_fat(h, t)) {
    throw InputError("classification needs a " + std::to_string(t) +
                     "-fat Hoffman graph");
  }
  if (!is_indecomposable(h)) {
    throw InputError("classification needs an indecomposable Hoffman graph");
  }
  const SpecialMatrix s = special_matrix(h);
  ClassificationCase out;
  out.hits = scan_forbidden(s, t);
  if (!out.hits.empty()) {
    out.tag = CaseTag::forbidden;
    return out;
  }

  const int n = s.dim();
  if (n == 1) {
    out.tag = s(0, 0) == -t ? CaseTag::minus_t : CaseTag::minus_t_minus_1;
    return out;
  }
  // Without forbidden submatrices every diagonal entry is -t and every
  // off-diagonal entry is +1 or -1.
  for (int x = 0; x < n; ++x) {
    if (s(x, x) != -t) {
      throw std::logic_error("forbidden-free special matrix with diagonal " +
                             std::to_string(s(x, x)));
    }
    for (int y = 0; y < n; ++y) {
      if (x != y && s(x, y) != 1 && s(x, y) != -1) {
        throw std::logic_error("forbidden-free special matrix with entry " +
                               std::to_string(s(x, y)));
      }
    }
  }
  // x R y iff S_xy = 1 or x = y; transitivity is forced by the m6 pattern.
  std::vector<int> cls(n, -1);
  std::vector<int> sizes;
  for (int x = 0; x < n; ++x) {
    if (cls[x] != -1) continue;
    cls[x] = static_cast<int>(sizes.size());
    sizes.push_back(1);
    for (int y = x + 1; y < n; ++y) {
      if (s(x, y) == 1) {
        cls[y] = cls[x];
        ++sizes.back();
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if ((cls[x] == cls[y]) != (s(x, y) == 1)) {
        throw std::logic_error("relation S_xy = 1 is not an equivalence");
      }
    }
  }
  if (sizes.size() == 1) {
    out.tag = CaseTag::one_class;
    return out;
  }
  if (sizes.size() > 2) {
    throw std::logic_error("more than two classes without an m5 pattern");
  }
  out.tag = CaseTag::two_class;
  out.r1 = sizes[0];
  out.r2 = sizes[1];
  if (out.r1 > t || out.r2 > t) {
    throw std::logic_error("two-class special matrix with a class larger "
                           "than t");
  }
  return out;
}

SpecialMatrix two_block_matrix(int r1, int r2, int t) {
  if (r1 < 1 || r2 < 1 || t < 1) {
    throw InputError("two-block matrix needs r1, r2, t >= 1");
  }
  const int n = r1 + r2;
  SpecialMatrix s(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      if (x == y) {
        s.set(x, y, -t);
      } else {
        s.set(x, y, (x < r1) == (y < r1) ? 1 : -1);
      }
    }
  }
  return s;
}

namespace {

class RealizationSearch {
 public:
  RealizationSearch(const SpecialMatrix& s, int cap) : s_(s), cap_(cap) {}

  std::vector<HoffmanGraph> run() {
    const int n = s_.dim();
    for (int x = 0; x < n; ++x) {
      if (s_(x, x) > 0) return {};
      for (int y = 0; y < n; ++y) {
        if (x != y && (s_(x, y) > 1 || s_(x, y) < s_(x, x))) return {};
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) pairs_.push_back({x, y});
    }
    choose_adjacency(0, std::vector<int>(pairs_.size(), 0));
    return std::move(out_);
  }

 private:
  void choose_adjacency(std::size_t k, std::vector<int> adj) {
    if (k == pairs_.size()) {
      fill_fats(adj);
      return;
    }
    const auto [x, y] = pairs_[k];
    for (int a = 0; a <= 1; ++a) {
      if (a - s_(x, y) < 0) continue;
      adj[k] = a;
      choose_adjacency(k + 1, adj);
    }
  }

  // Vertex demands are fat degrees, pair demands are common fat counts.
  void fill_fats(const std::vector<int>& adj) {
    const int n = s_.dim();
    vertex_need_.assign(n, 0);
    pair_need_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) vertex_need_[x] = -s_(x, x);
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const auto [x, y] = pairs_[k];
      const int c = adj[k] - s_(x, y);
      pair_need_[x * n + y] = c;
      pair_need_[y * n + x] = c;
    }
    masks_.clear();
    for (int mask = 1; mask < (1 << n); ++mask) {
      bool usable = true;
      for (int x = 0; x < n && usable; ++x) {
        if (!(mask >> x & 1)) continue;
        usable = vertex_need_[x] > 0;
        for (int y = x + 1; y < n && usable; ++y) {
          if (mask >> y & 1) usable = pair_need_[x * n + y] > 0;
        }
      }
      if (usable) masks_.push_back(mask);
    }
    std::stable_sort(masks_.begin(), masks_.end(), [](int a, int b) {
      return __builtin_popcount(a) > __builtin_popcount(b);
    });
    chosen_.clear();
    current_adj_ = adj;
    place(0);
  }

  void place(std::size_t k) {
    const int n = s_.dim();
    if (k == masks_.size()) {
      for (int x = 0; x < n; ++x) {
        if (vertex_need_[x] != 0) return;
      }
      for (int v : pair_need_) {
        if (v != 0) return;
      }
      emit();
      return;
    }
    const int mask = masks_[k];
    int most = cap_;
    for (int x = 0; x < n; ++x) {
      if (!(mask >> x & 1)) continue;
      most = std::min(most, vertex_need_[x]);
      for (int y = x + 1; y < n; ++y) {
        if (mask >> y & 1) most = std::min(most, pair_need_[x * n + y]);
      }
    }
    for (int count = most; count >= 0; --count) {
      apply(mask, count, -1);
      for (int i = 0; i < count; ++i) chosen_.push_back(mask);
      if (pairs_done_after(k)) place(k + 1);
      chosen_.resize(chosen_.size() - count);
      apply(mask, count, +1);
    }
  }

  // Once only singletons remain, every pair demand must already be met.
  bool pairs_done_after(std::size_t k) const {
    if (k + 1 < masks_.size() && __builtin_popcount(masks_[k + 1]) > 1) {
      return true;
    }
    for (int v : pair_need_) {
      if (v != 0) return false;
    }
    return true;
  }

  void apply(int mask, int count, int sign) {
    const int n = s_.dim();
    for (int x = 0; x < n; ++x) {
      if (!(mask >> x & 1)) continue;
      vertex_need_[x] += sign * count;
      for (int y = 0; y < n; ++y) {
        if (y != x && (mask >> y & 1)) pair_need_[x * n + y] += sign * count;
      }
    }
  }

  void emit() {
    const int n = s_.dim();
    Graph slim(n);
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (current_adj_[k]) slim.add_edge(pairs_[k].first, pairs_[k].second);
    }
    std::vector<VertexSet> fats;
    for (int mask : chosen_) {
      std::vector<int> members;
      for (int x = 0; x < n; ++x) {
        if (mask >> x & 1) members.push_back(x);
      }
      fats.emplace_back(std::move(members));
    }
    out_.emplace_back(std::move(slim), std::move(fats));
  }

  const SpecialMatrix& s_;
  int cap_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> vertex_need_;
  std::vector<int> pair_need_;
  std::vector<int> masks_;
  std::vector<int> chosen_;
  std::vector<int> current_adj_;
  std::vector<HoffmanGraph> out_;
};

}  // namespace

std::vector<HoffmanGraph> realizations(const SpecialMatrix& s,
                                       int max_multiplicity) {
  if (s.dim() < 1 || s.dim() > 8) {
    throw ResourceError("realization search supports 1..8 slim vertices");
  }
  return RealizationSearch(s, max_multiplicity).run();
}

std::vector<HoffmanGraph> enumerate_gt(int t) {
  if (t < 1) throw InputError("t must be positive");
  if (t > 3) throw ResourceError("family enumeration is limited to t <= 3");
  std::vector<HoffmanGraph> members{cherry(t + 1)};
  for (int r1 = 1; r1 <= t; ++r1) {
    for (int r2 = r1; r2 <= t; ++r2) {
      const SpecialMatrix target = two_block_matrix(r1, r2, t);
      const std::size_t first = members.size();
      for (auto& h : realizations(target, t + 1)) {
        if (!is_t_fat(h, t) || !is_indecomposable(h)) continue;
        if (!(special_matrix(h) == target)) continue;
        bool seen = false;
        for (std::size_t i = first; i < members.size() && !seen; ++i) {
          seen = hoffman_isomorphic(h, members[i]);
        }
        if (!seen) members.push_back(std::move(h));
      }
    }
  }
  return members;
}

const std::vector<HoffmanGraph>& gt_family(int t) {
  static std::mutex mu;
  static std::map<int, std::vector<HoffmanGraph>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, enumerate_gt(t)).first;
  return it->second;
}

HoffmanGraph gt_member(int t, int index) {
  if (t < 1) throw InputError("t must be positive");
  if (index == 0) return cherry(t + 1);
  const auto& family = gt_family(t);
  if (index < 0 || index >= static_cast<int>(family.size())) {
    throw InputError("no family member with index " + std::to_string(index));
  }
  return family[index];
}

namespace {

int permute_mask(int mask, const std::vector<int>& perm) {
  int out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (mask >> i & 1) out |= 1 << perm[i];
  }
  return out;
}

}  // namespace

std::vector<HoffmanGraph> enumerate_t_fat(int slim, int max_fat, int t) {
  if (slim < 1 || slim > 5 || max_fat < 0 || max_fat > 10) {
    throw ResourceError("enumeration supports 1..5 slim and <= 10 fat");
  }
  if (t < 1) throw InputError("t must be positive");

  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < slim; ++x) {
    for (int y = x + 1; y < slim; ++y) pairs.push_back({x, y});
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(slim);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto edge_code = [&](int code, const std::vector<int>& p) {
    int out = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!(code >> k & 1)) continue;
      int a = p[pairs[k].first];
      int b = p[pairs[k].second];
      if (a > b) std::swap(a, b);
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (pairs[j].first == a && pairs[j].second == b) out |= 1 << j;
      }
    }
    return out;
  };

  const int mask_count = (1 << slim) - 1;
  std::vector<HoffmanGraph> out;
  for (int code = 0; code < (1 << pairs.size()); ++code) {
    // Keep one labelled representative per slim graph: the minimal code.
    bool canonical = true;
    std::vector<std::vector<int>> automorphisms;
    for (const auto& p : perms) {
      const int image = edge_code(code, p);
      if (image < code) {
        canonical = false;
        break;
      }
      if (image == code) automorphisms.push_back(p);
    }
    if (!canonical) continue;

    Graph g(slim);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (code >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
    }

    std::unordered_set<std::uint64_t> seen;
    std::vector<int> chosen;
    std::vector<int> cover(slim, 0);
    auto key_of = [&](const std::vector<int>& masks) {
      std::uint64_t best = ~0ull;
      std::vector<int> image(masks.size());
      for (const auto& p : automorphisms) {
        for (std::size_t i = 0; i < masks.size(); ++i) {
          image[i] = permute_mask(masks[i], p);
        }
        std::sort(image.begin(), image.end(), std::greater<>());
        std::uint64_t key = 0;
        for (int m : image) key = (key << 5) | static_cast<std::uint64_t>(m);
        best = std::min(best, key);
      }
      return best;
    };
    // Nondecreasing mask sequences enumerate each multiset once.
    auto extend = [&](auto&& self, int smallest) -> void {
      bool fat_enough = true;
      for (int x = 0; x < slim; ++x) fat_enough = fat_enough && cover[x] >= t;
      if (fat_enough && seen.insert(key_of(chosen)).second) {
        std::vector<VertexSet> fats;
        for (int m : chosen) {
          std::vector<int> members;
          for (int x = 0; x < slim; ++x) {
            if (m >> x & 1) members.push_back(x);
          }
          fats.emplace_back(std::move(members));
        }
        out.emplace_back(g, std::move(fats));
      }
      if (static_cast<int>(chosen.size()) == max_fat) return;
      for (int m = smallest; m <= mask_count; ++m) {
        chosen.push_back(m);
        for (int x = 0; x < slim; ++x) cover[x] += m >> x & 1;
        self(self, m);
        for (int x = 0; x < slim; ++x) cover[x] -= m >> x & 1;
        chosen.pop_back();
      }
    };
    extend(extend, 1);
  }
  return out;
}

}  // namespace hoffman
