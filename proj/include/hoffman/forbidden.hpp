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

#include "hoffman/graph.hpp"
#include "hoffman/hoffman_graph.hpp"

namespace hoffman {

/// The matrices m_{1,a}, ..., m_{4,a} (parametrised) and m_5, ..., m_9.
enum class PatternKind { m1, m2, m3, m4, m5, m6, m7, m8, m9 };

struct PatternId {
  PatternKind kind = PatternKind::m1;
  int a = 0;  // used by m1..m4 only

  /// "m1(-2)", "m3(1)", "m7", ...
  std::string name() const;
  friend bool operator==(const PatternId&, const PatternId&) = default;
  friend auto operator<=>(const PatternId&, const PatternId&) = default;
};

/// A principal submatrix of a special matrix equivalent to a forbidden
/// pattern.
struct ForbiddenHit {
  VertexSet indices;
  PatternId pattern;

  friend bool operator==(const ForbiddenHit&, const ForbiddenHit&) = default;
};

/// Whether `p` belongs to the forbidden family for this t. The m1 family is
/// infinite: every a <= -2 is in range.
bool pattern_in_range(const PatternId& p, int t);

/// Explicit matrix of a pattern.
SpecialMatrix pattern_matrix(const PatternId& p, int t);

/// Every pattern of the family for t. The infinite m1 branch is truncated to
/// a = -2, ..., -1-m1_count.
std::vector<PatternId> forbidden_patterns(int t, int m1_count = 1);

/// Closed-form smallest eigenvalue of a pattern.
double forbidden_lambda_min(const PatternId& p, int t);

/// Matches a 1x1, 2x2 or 3x3 matrix against the family up to simultaneous
/// row/column permutation. A 1x1 matrix matches when its entry is <= -t-2.
std::optional<PatternId> is_forbidden(const SpecialMatrix& m, int t);

/// Every forbidden principal submatrix of size 1..3, sorted by indices.
/// All patterns are irreducible, so only index sets connected through
/// nonzero off-diagonal entries are examined.
std::vector<ForbiddenHit> scan_forbidden(const SpecialMatrix& s, int t);

enum class CaseTag { minus_t, minus_t_minus_1, one_class, two_class, forbidden };

std::string to_string(CaseTag tag);

struct ClassificationCase {
  CaseTag tag = CaseTag::forbidden;
  int r1 = 0;  // two_class: size of the class containing slim vertex 0
  int r2 = 0;
  std::vector<ForbiddenHit> hits;  // forbidden only
};

/// Shape of the special matrix of an indecomposable t-fat Hoffman graph:
/// (-t), (-t-1), J-(t+1)I, the two-class block form, or forbidden.
/// Throws InputError for decomposable or non-t-fat input.
ClassificationCase classify_indecomposable(const HoffmanGraph& h, int t);

/// [[J_r1-(t+1)I, -J], [-J, J_r2-(t+1)I]].
SpecialMatrix two_block_matrix(int r1, int r2, int t);

/// Every labelled Hoffman graph with special matrix `s`, where a fat
/// neighbourhood may repeat at most `max_multiplicity` times.
std::vector<HoffmanGraph> realizations(const SpecialMatrix& s,
                                       int max_multiplicity);

/// Indecomposable t-fat Hoffman graphs with special matrix (-t-1) or the
/// two-class block form with class sizes at most t, one per isomorphism
/// class. Element 0 is always the cherry with t+1 fat vertices. Throws
/// ResourceError for t > 3.
std::vector<HoffmanGraph> enumerate_gt(int t);

/// Cached view of enumerate_gt(t).
const std::vector<HoffmanGraph>& gt_family(int t);

/// Member `index` of the family; index 0 is answered without enumerating.
HoffmanGraph gt_member(int t, int index);

/// All t-fat Hoffman graphs with exactly `slim` slim vertices and at most
/// `max_fat` fat vertices, one per isomorphism class (slim <= 5,
/// max_fat <= 10).
std::vector<HoffmanGraph> enumerate_t_fat(int slim, int max_fat, int t);

}  // namespace hoffman
