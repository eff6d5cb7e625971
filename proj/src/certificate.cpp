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

#include "hoffman/certificate.hpp"

#include <map>

#include "hoffman/error.hpp"

namespace hoffman {

namespace {

std::optional<PartTag> tag_for(const HoffmanGraph& part,
                               const ClassificationCase& c, int t) {
  switch (c.tag) {
    case CaseTag::minus_t:
      return PartTag{0, true};
    case CaseTag::minus_t_minus_1:
      return PartTag{0, false};
    case CaseTag::two_class: {
      const auto& family = gt_family(t);
      for (std::size_t i = 1; i < family.size(); ++i) {
        if (hoffman_isomorphic(part, family[i])) {
          return PartTag{static_cast<int>(i), false};
        }
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

CertifyResult certify_line(const HoffmanGraph& h, int t) {
  if (t < 1) throw InputError("t must be positive");
  if (!is_t_fat(h, t)) {
    throw InputError("certification needs a " + std::to_string(t) +
                     "-fat Hoffman graph");
  }
  CertifyResult result;
  const Decomposition d = decompose(h);

  std::vector<VertexSet> added;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto c = classify_indecomposable(d.part_graphs[i], t);
    const auto& members = d.parts[i].members();
    if (c.tag == CaseTag::forbidden) {
      for (const auto& hit : c.hits) {
        std::vector<int> idx;
        for (int k : hit.indices) idx.push_back(members[k]);
        result.hits.push_back({VertexSet(std::move(idx)), hit.pattern});
        result.failures.push_back("part " + describe(d.parts[i]) +
                                  " contains forbidden pattern " +
                                  hit.pattern.name() + " at " +
                                  describe(result.hits.back().indices));
      }
    } else if (c.tag == CaseTag::one_class) {
      added.push_back(d.parts[i]);
    }
  }
  if (!result.failures.empty()) return result;

  auto fats = h.fat_neighborhoods();
  fats.insert(fats.end(), added.begin(), added.end());
  LineCertificate cert;
  cert.t = t;
  cert.witness = HoffmanGraph(h.slim(), std::move(fats));
  cert.added_fats = added;
  cert.parts = decompose(cert.witness);
  for (std::size_t i = 0; i < cert.parts.parts.size(); ++i) {
    const auto& part = cert.parts.part_graphs[i];
    const auto c = classify_indecomposable(part, t);
    const auto tag = tag_for(part, c, t);
    if (!tag) {
      result.failures.push_back("witness part " +
                                describe(cert.parts.parts[i]) +
                                " (case " + to_string(c.tag) +
                                ") matches no family member");
      continue;
    }
    cert.part_tags.push_back(*tag);
  }
  if (result.failures.empty()) result.certificate = std::move(cert);
  return result;
}

std::string to_string(VerifyCode code) {
  switch (code) {
    case VerifyCode::ok:
      return "ok";
    case VerifyCode::wrong_t:
      return "wrong_t";
    case VerifyCode::not_t_fat:
      return "not_t_fat";
    case VerifyCode::slim_graph_mismatch:
      return "slim_graph_mismatch";
    case VerifyCode::not_induced:
      return "not_induced";
    case VerifyCode::added_fats_mismatch:
      return "added_fats_mismatch";
    case VerifyCode::bad_partition:
      return "bad_partition";
    case VerifyCode::part_graph_mismatch:
      return "part_graph_mismatch";
    case VerifyCode::not_a_decomposition:
      return "not_a_decomposition";
    case VerifyCode::bad_tag:
      return "bad_tag";
    case VerifyCode::part_not_in_family:
      return "part_not_in_family";
  }
  return "unknown";
}

VerifyResult verify_certificate(const HoffmanGraph& h,
                                const LineCertificate& cert, int t) {
  if (cert.t != t) return {VerifyCode::wrong_t, "certificate built for t=" +
                                                    std::to_string(cert.t)};
  if (t < 1 || !is_t_fat(h, t)) return {VerifyCode::not_t_fat, ""};
  const HoffmanGraph& w = cert.witness;
  if (!(w.slim() == h.slim())) return {VerifyCode::slim_graph_mismatch, ""};
  if (!fat_submultiset(h, w)) return {VerifyCode::not_induced, ""};

  std::map<VertexSet, int> balance;
  for (const auto& nb : w.fat_neighborhoods()) ++balance[nb];
  for (const auto& nb : h.fat_neighborhoods()) --balance[nb];
  for (const auto& nb : cert.added_fats) --balance[nb];
  for (const auto& [nb, count] : balance) {
    if (count != 0) return {VerifyCode::added_fats_mismatch, describe(nb)};
  }

  const auto& parts = cert.parts.parts;
  if (cert.parts.part_graphs.size() != parts.size() ||
      cert.part_tags.size() != parts.size()) {
    return {VerifyCode::bad_partition, "part, graph and tag counts differ"};
  }
  try {
    if (!check_decomposition(w, parts) || !is_block_diagonal(w, parts)) {
      return {VerifyCode::not_a_decomposition, ""};
    }
  } catch (const InputError& e) {
    return {VerifyCode::bad_partition, e.what()};
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(cert.parts.part_graphs[i] == generated_subgraph(w, parts[i]))) {
      return {VerifyCode::part_graph_mismatch, describe(parts[i])};
    }
  }

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const PartTag& tag = cert.part_tags[i];
    HoffmanGraph member;
    try {
      member = gt_member(t, tag.member);
    } catch (const InputError& e) {
      return {VerifyCode::bad_tag, e.what()};
    }
    const auto& part = cert.parts.part_graphs[i];
    const bool fits = tag.induced ? embeds_as_induced(part, member)
                                  : hoffman_isomorphic(part, member);
    if (!fits) return {VerifyCode::part_not_in_family, describe(parts[i])};
  }
  return {};
}

}  // namespace hoffman
