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


#include <cmath>

#include "doctest.h"

#include "hoffman/certificate.hpp"
#include "hoffman/error.hpp"
#include "hoffman/families.hpp"
#include "support.hpp"

using namespace hoffman;

namespace {

HoffmanGraph one_class_graph(int n, int t) {
  std::vector<VertexSet> fats;
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < t; ++k) fats.push_back({x});
  }
  return HoffmanGraph(complete(n), fats);
}

}  // namespace

TEST_CASE("cherry certificates") {
  for (int t = 1; t <= 3; ++t) {
    auto res = certify_line(cherry(t), t);
    REQUIRE(res.ok());
    const auto& c = *res.certificate;
    CHECK(c.added_fats.empty());
    REQUIRE(c.part_tags.size() == 1);
    CHECK(c.part_tags[0] == PartTag{0, true});
    CHECK(verify_certificate(cherry(t), c, t).ok());

    auto full = certify_line(cherry(t + 1), t);
    REQUIRE(full.ok());
    CHECK(full.certificate->part_tags[0] == PartTag{0, false});
  }
}

TEST_CASE("one-class parts get one extra fat vertex") {
  for (int t = 1; t <= 3; ++t) {
    auto h = one_class_graph(3, t);
    auto res = certify_line(h, t);
    REQUIRE(res.ok());
    const auto& c = *res.certificate;
    REQUIRE(c.added_fats.size() == 1);
    CHECK(c.added_fats[0] == VertexSet{0, 1, 2});
    CHECK(c.witness.fat_count() == h.fat_count() + 1);
    REQUIRE(c.parts.parts.size() == 3);
    for (const auto& tag : c.part_tags) CHECK(tag == PartTag{0, false});
    CHECK(verify_certificate(h, c, t).ok());
  }
}

TEST_CASE("forbidden parts fail with the hit") {
  auto res = certify_line(cherry(4), 2);
  CHECK_FALSE(res.ok());
  REQUIRE(res.hits.size() == 1);
  CHECK(res.hits[0].indices == VertexSet{0});
  CHECK_FALSE(res.failures.empty());
  // one fat on a slim K2 plus an isolated slim vertex gives m9 for t = 1
  HoffmanGraph m9(Graph(3, {{0, 1}}), {{0, 1, 2}});
  auto r9 = certify_line(m9, 1);
  CHECK_FALSE(r9.ok());
  REQUIRE_FALSE(r9.hits.empty());
  CHECK(r9.hits[0].pattern.kind == PatternKind::m9);
  CHECK_THROWS_AS(certify_line(cherry(1), 2), InputError);
}

TEST_CASE("family members certify") {
  for (int t = 1; t <= 2; ++t) {
    const auto& fam = gt_family(t);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      auto res = certify_line(fam[i], t);
      REQUIRE(res.ok());
      auto v = verify_certificate(fam[i], *res.certificate, t);
      CHECK_MESSAGE(v.ok(), v.detail);
    }
  }
}

TEST_CASE("tampered certificates are rejected") {
  const auto& fam = gt_family(2);
  auto h = fam.back();
  auto res = certify_line(h, 2);
  REQUIRE(res.ok());
  auto good = *res.certificate;
  CHECK(verify_certificate(h, good, 2).ok());

  auto wrong_t = good;
  CHECK(verify_certificate(h, wrong_t, 1).code == VerifyCode::wrong_t);

  auto tag = good;
  tag.part_tags[0].member = 0;
  auto vt = verify_certificate(h, tag, 2);
  CHECK_FALSE(vt.ok());

  auto out_of_range = good;
  out_of_range.part_tags[0].member = 99;
  CHECK(verify_certificate(h, out_of_range, 2).code == VerifyCode::bad_tag);

  auto extra = good;
  extra.added_fats.push_back({0});
  CHECK(verify_certificate(h, extra, 2).code == VerifyCode::added_fats_mismatch);

  auto split = good;
  split.parts.parts = {{0}, {1, 2, 3}};
  CHECK_FALSE(verify_certificate(h, split, 2).ok());

  Graph other(h.slim_count());
  auto slim = good;
  slim.witness = HoffmanGraph(other, h.fat_neighborhoods());
  CHECK(verify_certificate(h, slim, 2).code == VerifyCode::slim_graph_mismatch);
  CHECK(to_string(VerifyCode::bad_tag) == "bad_tag");
}

TEST_CASE("small enumerated graphs certify above -t-sqrt2") {
  for (int t = 1; t <= 2; ++t) {
    for (int s = 1; s <= 3; ++s) {
      for (const auto& h : enumerate_t_fat(s, 5, t)) {
        if (lambda_min(h) <= -t - std::sqrt(2.0) + 1e-9) continue;
        auto res = certify_line(h, t);
        REQUIRE(res.ok());
        auto v = verify_certificate(h, *res.certificate, t);
        CHECK_MESSAGE(v.ok(), v.detail);
      }
    }
  }
}

TEST_CASE("random t-fat graphs") {
  testing::Rng rng(8080);
  for (int trial = 0; trial < 200; ++trial) {
    int t = 1 + trial % 2;
    auto h = testing::random_t_fat(1 + trial % 6, t, rng);
    auto res = certify_line(h, t);
    if (lambda_min(h) > -t - std::sqrt(2.0) + 1e-9) CHECK(res.ok());
    if (res.ok()) CHECK(verify_certificate(h, *res.certificate, t).ok());
    else CHECK_FALSE(res.hits.empty());
  }
}
