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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hoffman/graph.hpp"

namespace hoffman {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitInput = 2,
  kExitResource = 3,
};

struct AnalyzeOptions {
  int t = 2;
  int m = 0;  // 0: m_of_t(t)
  int n = 0;  // 0: (m+1)^2
  bool relaxed = false;
  bool with_spectrum = true;
};

/// The full analysis report for a graph plus its exit code.
struct Analysis {
  nlohmann::ordered_json report;
  int exit_code = kExitOk;
};

Analysis analyze_graph(const Graph& g, const AnalyzeOptions& opts);

/// Rounds to 12 significant digits and turns -0 into 0.
double report_number(double x);

/// Entry point of the command line tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hoffman
