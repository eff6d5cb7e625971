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


#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"

#include "hoffman/error.hpp"
#include "hoffman/families.hpp"
#include "hoffman/forbidden.hpp"
#include "hoffman/hoffman_graph.hpp"
#include "support.hpp"

using namespace hoffman;

namespace {

HoffmanGraph fig_h1() { return HoffmanGraph(Graph(2), {{0, 1}, {0}, {1}}); }
HoffmanGraph fig_h2() {
  return HoffmanGraph(Graph(2, {{0, 1}}), {{0, 1}, {0, 1}});
}

// Relabels slim vertices by `perm` and reverses the fat order.
HoffmanGraph shuffled(const HoffmanGraph& h, const std::vector<int>& perm) {
  Graph g(h.slim_count());
  for (const Edge& e : h.slim().edges()) g.add_edge(perm[e.u], perm[e.v]);
  std::vector<VertexSet> fats;
  for (int f = h.fat_count() - 1; f >= 0; --f) {
    std::vector<int> nb;
    for (int x : h.fat_neighbors(f)) nb.push_back(perm[x]);
    fats.emplace_back(nb);
  }
  return HoffmanGraph(g, fats);
}

}  // namespace

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(HoffmanGraph(Graph(2), {VertexSet{}}), InputError);
  CHECK_THROWS_AS(HoffmanGraph(Graph(2), {{0, 2}}), InputError);
  auto h = fig_h1();
  CHECK(h.fats_of(0) == std::vector<int>{0, 1});
  CHECK(h.fat_degree(1) == 2);
  CHECK(h.common_fats(0, 1) == 1);
}

TEST_CASE("special matrices") {
  CHECK(special_matrix(cherry(3)) == SpecialMatrix::from_rows({{-3}}));
  auto fig = SpecialMatrix::from_rows({{-2, -1}, {-1, -2}});
  CHECK(special_matrix(fig_h1()) == fig);
  CHECK(special_matrix(fig_h2()) == fig);
  auto k3 = HoffmanGraph(complete(3), {{0, 1, 2}});
  CHECK(special_matrix(k3) ==
        SpecialMatrix::from_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
}

TEST_CASE("smallest eigenvalues") {
  CHECK(lambda_min(cherry(3)) == doctest::Approx(-3));
  CHECK(lambda_min(fig_h1()) == doctest::Approx(-3));
  for (int t = 1; t <= 6; ++t) CHECK(lambda_min(cherry(t)) == doctest::Approx(-t));
  // S = J_3 - 3I: a slim triangle, two private fats per vertex
  HoffmanGraph one_class(complete(3), {{0}, {0}, {1}, {1}, {2}, {2}});
  CHECK(special_matrix(one_class) ==
        SpecialMatrix::from_rows({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));
  CHECK(lambda_min(one_class) == doctest::Approx(-3));
  HoffmanGraph crowded(complete(3), {{0}, {0}, {0}, {1}, {1}, {1}, {2}, {2}, {2}});
  CHECK(lambda_min(crowded) == doctest::Approx(-4));
}

TEST_CASE("fatness") {
  CHECK(is_t_fat(cherry(2), 2));
  CHECK_FALSE(is_t_fat(cherry(2), 3));
  CHECK(is_t_fat(HoffmanGraph(Graph(0), {}), 5));
}

TEST_CASE("generated subgraphs") {
  HoffmanGraph h(Graph(2, {{0, 1}}), {{0, 1}, {1}});
  auto g = generated_subgraph(h, {0});
  CHECK(g.slim_count() == 1);
  CHECK(g.fat_count() == 1);
  CHECK(generated_subgraph(h, {0, 1}) == h);
  CHECK_THROWS_AS(generated_subgraph(h, VertexSet{}), InputError);
  CHECK_THROWS_AS(generated_subgraph(h, {5}), InputError);
}

TEST_CASE("cherries") {
  CHECK_THROWS_AS(cherry(0), InputError);
  auto c = cherry(1);
  CHECK(c.slim_count() == 1);
  CHECK(c.fat_count() == 1);
  CHECK(slim_graph(cherry(4)) == Graph(1));
}

TEST_CASE("clique expansion") {
  auto h = fig_h1();
  CHECK(clique_expand(h, {}) == h);
  auto k2 = clique_expand(cherry(1), {{0, 1}});
  CHECK(k2.fat_count() == 0);
  CHECK(slim_graph(k2) == complete(2));
  auto e = clique_expand(h, {{1, 3}});
  CHECK(e.slim_count() == 5);
  CHECK(e.fat_count() == 2);
  CHECK(e.slim().adjacent(0, 2));
  CHECK(e.slim().adjacent(2, 4));
  CHECK_FALSE(e.slim().adjacent(1, 2));
  CHECK_THROWS_AS(clique_expand(h, {{1, 0}}), InputError);
  CHECK_THROWS_AS(clique_expand(h, {{7, 1}}), InputError);
  CHECK(slim_graph(HoffmanGraph(complete(3), {{0, 1, 2}})) == complete(3));
}

TEST_CASE("isomorphism") {
  auto h1 = fig_h1();
  auto h2 = fig_h2();
  CHECK(hoffman_isomorphic(h1, h1));
  CHECK_FALSE(hoffman_isomorphic(h1, h2));
  CHECK_FALSE(hoffman_isomorphic(cherry(2), cherry(3)));
  testing::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto h = testing::random_hoffman(2 + trial % 6, 1 + trial % 5, 0.5, rng);
    std::vector<int> perm(h.slim_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto k = shuffled(h, perm);
    CHECK(hoffman_isomorphic(h, k));
    CHECK(hoffman_isomorphic(k, h));
    // equal special matrices up to the same permutation
    auto s = special_matrix(h);
    auto t = special_matrix(k);
    for (int i = 0; i < s.dim(); ++i) {
      for (int j = 0; j < s.dim(); ++j) CHECK(s(i, j) == t(perm[i], perm[j]));
    }
  }
}

TEST_CASE("isomorphism is an equivalence on a corpus") {
  std::vector<HoffmanGraph> corpus = {fig_h1(), fig_h2(), cherry(2), cherry(3)};
  for (const auto& m : gt_family(2)) corpus.push_back(m);
  for (const auto& m : gt_family(1)) corpus.push_back(m);
  int n = static_cast<int>(corpus.size());
  std::vector<std::vector<bool>> iso(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) iso[i][j] = hoffman_isomorphic(corpus[i], corpus[j]);
  }
  for (int i = 0; i < n; ++i) {
    CHECK(iso[i][i]);
    for (int j = 0; j < n; ++j) {
      CHECK(iso[i][j] == iso[j][i]);
      for (int k = 0; k < n; ++k) {
        if (iso[i][j] && iso[j][k]) CHECK(iso[i][k]);
      }
    }
  }
}

TEST_CASE("induced embedding") {
  CHECK(embeds_as_induced(cherry(2), cherry(3)));
  CHECK_FALSE(embeds_as_induced(cherry(3), cherry(2)));
  CHECK(embeds_as_induced(cherry(2), fig_h1()));
  CHECK(embeds_as_induced(fig_h1(), fig_h1()));
  CHECK_FALSE(embeds_as_induced(fig_h1(), fig_h2()));
}

TEST_CASE("fat sub-multisets") {
  auto h = fig_h1();
  CHECK(fat_submultiset(HoffmanGraph(Graph(2), {{0}, {0, 1}}), h));
  CHECK_FALSE(fat_submultiset(HoffmanGraph(Graph(2), {{0}, {0}}), h));
  CHECK_FALSE(fat_submultiset(HoffmanGraph(Graph(2, {{0, 1}}), {{0}}), h));
}

TEST_CASE("special matrix invariants on random graphs") {
  testing::Rng rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    auto h = testing::random_hoffman(1 + trial % 8, trial % 9, 0.5, rng);
    auto s = special_matrix(h);
    for (int x = 0; x < s.dim(); ++x) {
      CHECK(s(x, x) <= 0);
      for (int y = 0; y < s.dim(); ++y) {
        CHECK(s(x, x) <= s(x, y));
        if (x != y) CHECK(s(x, y) <= 1);
        CHECK(s(x, y) == s(y, x));
      }
    }
  }
}

TEST_CASE("generated subgraphs do not lower the smallest eigenvalue") {
  testing::Rng rng(321);
  for (int trial = 0; trial < 300; ++trial) {
    auto h = testing::random_hoffman(1 + trial % 8, 1 + trial % 8, 0.5, rng);
    auto w = testing::random_subset(h.slim_count(), rng);
    CHECK(lambda_min(generated_subgraph(h, w)) >= lambda_min(h) - 1e-9);
  }
}

TEST_CASE("clique expansion does not lower the smallest eigenvalue") {
  std::vector<HoffmanGraph> set = {cherry(1), cherry(2), fig_h1(), fig_h2()};
  for (const auto& m : gt_family(2)) set.push_back(m);
  for (const auto& h : set) {
    double base = lambda_min(h);
    for (int n = 1; n <= 20; ++n) {
      CHECK(lambda_min(clique_expand_all(h, n)) >= base - 1e-9);
    }
  }
}
