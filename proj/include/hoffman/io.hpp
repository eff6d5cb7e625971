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

#include <string>
#include <string_view>

#include "hoffman/graph.hpp"
#include "hoffman/hoffman_graph.hpp"

namespace hoffman {

/// "graph <n>" then "e <u> <v>" lines; '#' starts a comment. Errors carry
/// the line number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// "hoffman <slim> <fat>", "e <u> <v>" slim edges, "f <i> <u>" fat-slim
/// edges. Every fat vertex needs at least one "f" line.
HoffmanGraph parse_hoffman(std::string_view text);
std::string serialize_hoffman(const HoffmanGraph& h);

/// Whole file; throws InputError if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace hoffman
