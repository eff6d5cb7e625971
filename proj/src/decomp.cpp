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

#include "hoffman/decomp.hpp"

#include <numeric>
#include <string>

#include "hoffman/error.hpp"

namespace hoffman {

namespace {

std::vector<int> part_index(const HoffmanGraph& h,
                            const std::vector<VertexSet>& parts) {
  std::vector<int> part_of(h.slim_count(), -1);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    if (parts[i].empty()) throw InputError("decomposition part is empty");
    for (int x : parts[i]) {
      if (x < 0 || x >= h.slim_count()) {
        throw InputError("part member " + std::to_string(x) +
                         " is not a slim vertex");
      }
      if (part_of[x] != -1) {
        throw InputError("slim vertex " + std::to_string(x) +
                         " lies in two parts");
      }
      part_of[x] = i;
    }
  }
  for (int x = 0; x < h.slim_count(); ++x) {
    if (part_of[x] == -1) {
      throw InputError("slim vertex " + std::to_string(x) + " is in no part");
    }
  }
  return part_of;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Decomposition decompose(const HoffmanGraph& h) {
  if (h.slim_count() < 1) throw InputError("Hoffman graph has no slim vertex");
  const int n = h.slim_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto off = special_off_diagonal(h);
  for (int x = 0; x < n; ++x) {
    for (const auto& [y, value] : off[x]) {
      const int rx = find_root(parent, x);
      const int ry = find_root(parent, y);
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  }
  std::vector<int> slot(n, -1);
  std::vector<std::vector<int>> members;
  for (int x = 0; x < n; ++x) {
    const int r = find_root(parent, x);
    if (slot[r] == -1) {
      slot[r] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[slot[r]].push_back(x);
  }
  Decomposition d;
  for (auto& m : members) {
    d.parts.emplace_back(std::move(m));
    d.part_graphs.push_back(generated_subgraph(h, d.parts.back()));
  }
  return d;
}

bool is_indecomposable(const HoffmanGraph& h) {
  return decompose(h).parts.size() == 1;
}

bool check_decomposition(const HoffmanGraph& h,
                         const std::vector<VertexSet>& parts) {
  const auto part_of = part_index(h, parts);

  // (i) and (iii): the fat vertices of member i are those meeting part i.
  std::vector<std::vector<bool>> member_fats(
      parts.size(), std::vector<bool>(h.fat_count(), false));
  for (int f = 0; f < h.fat_count(); ++f) {
    for (int x : h.fat_neighbors(f)) member_fats[part_of[x]][f] = true;
  }
  for (int f = 0; f < h.fat_count(); ++f) {
    bool covered = false;
    for (const auto& fats : member_fats) covered = covered || fats[f];
    if (!covered) return false;
  }
  for (int x = 0; x < h.slim_count(); ++x) {
    for (int f : h.fats_of(x)) {
      if (!member_fats[part_of[x]][f]) return false;
    }
  }

  // (ii) holds because part_index accepted a partition.

  // (iv): only pairs that are adjacent or share a fat vertex can fail.
  for (int x = 0; x < h.slim_count(); ++x) {
    std::vector<int> others(h.slim().neighbors(x));
    for (int f : h.fats_of(x)) {
      for (int y : h.fat_neighbors(f)) others.push_back(y);
    }
    for (int y : others) {
      if (y <= x || part_of[y] == part_of[x]) continue;
      const int common = h.common_fats(x, y);
      if (common > 1) return false;
      if ((common == 1) != h.slim().adjacent(x, y)) return false;
    }
  }
  return true;
}

bool is_block_diagonal(const HoffmanGraph& h,
                       const std::vector<VertexSet>& parts) {
  const auto part_of = part_index(h, parts);
  const auto off = special_off_diagonal(h);
  for (int x = 0; x < h.slim_count(); ++x) {
    for (const auto& [y, value] : off[x]) {
      if (part_of[x] != part_of[y]) return false;
    }
  }
  return true;
}

}  // namespace hoffman
