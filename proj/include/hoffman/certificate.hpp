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

#include <optional>
#include <string>
#include <vector>

#include "hoffman/decomp.hpp"
#include "hoffman/forbidden.hpp"
#include "hoffman/hoffman_graph.hpp"

namespace hoffman {

/// Names the family member a witness part is matched against.
struct PartTag {
  int member = 0;        // index into gt_family(t); 0 is the (t+1)-cherry
  bool induced = false;  // true: proper induced subgraph, false: isomorphic

  friend bool operator==(const PartTag&, const PartTag&) = default;
};

/// Witness that h is a line Hoffman graph of the family for t: a Hoffman
/// graph with the same slim graph that contains h and decomposes into
/// induced subgraphs of family members.
struct LineCertificate {
  int t = 1;
  HoffmanGraph witness;
  std::vector<VertexSet> added_fats;  // neighbourhoods of fat vertices added to h
  Decomposition parts;                // finest decomposition of the witness
  std::vector<PartTag> part_tags;
};

struct CertifyResult {
  std::optional<LineCertificate> certificate;
  std::vector<ForbiddenHit> hits;  // in slim indices of h
  std::vector<std::string> failures;

  bool ok() const { return certificate.has_value(); }
};

/// Builds a certificate from the finest decomposition of h: (-t) parts are
/// induced in the (t+1)-cherry, (-t-1) parts are cherries, J-(t+1)I parts
/// receive one extra fat vertex on all their slim vertices, and two-class
/// parts are matched to a family member by isomorphism. Fails if a part has
/// a forbidden submatrix. Throws InputError unless h is t-fat.
CertifyResult certify_line(const HoffmanGraph& h, int t);

enum class VerifyCode {
  ok,
  wrong_t,
  not_t_fat,
  slim_graph_mismatch,
  not_induced,
  added_fats_mismatch,
  bad_partition,
  part_graph_mismatch,
  not_a_decomposition,
  bad_tag,
  part_not_in_family,
};

std::string to_string(VerifyCode code);

struct VerifyResult {
  VerifyCode code = VerifyCode::ok;
  std::string detail;

  bool ok() const { return code == VerifyCode::ok; }
};

/// Rechecks every claim of a certificate from scratch.
VerifyResult verify_certificate(const HoffmanGraph& h,
                                const LineCertificate& cert, int t);

}  // namespace hoffman
