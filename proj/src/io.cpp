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


#include "hoffman/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "hoffman/error.hpp"

namespace hoffman {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                 line[i] == '\r')) {
        ++i;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
             line[j] != '\r') {
        ++j;
      }
      if (j > i) l.words.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.words.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

int to_int(const Line& l, std::size_t k) {
  std::string_view w = l.words[k];
  int value = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc() || ptr != w.data() + w.size()) {
    fail(l.number, "expected an integer, got '" + std::string(w) + "'");
  }
  return value;
}

void expect_words(const Line& l, std::size_t n) {
  if (l.words.size() != n) {
    fail(l.number, "expected " + std::to_string(n) + " fields, got " +
                       std::to_string(l.words.size()));
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty graph file");
  const Line& head = lines.front();
  if (head.words[0] != "graph") fail(head.number, "expected 'graph <n>'");
  expect_words(head, 2);
  int n = to_int(head, 1);
  if (n < 0) fail(head.number, "negative order");
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.words[0] != "e") {
      fail(l.number, "unknown record '" + std::string(l.words[0]) + "'");
    }
    expect_words(l, 3);
    try {
      g.add_edge(to_int(l, 1), to_int(l, 2));
    } catch (const InputError& e) {
      fail(l.number, e.what());
    }
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
  return out.str();
}

HoffmanGraph parse_hoffman(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty hoffman file");
  const Line& head = lines.front();
  if (head.words[0] != "hoffman") {
    fail(head.number, "expected 'hoffman <slim> <fat>'");
  }
  expect_words(head, 3);
  int ns = to_int(head, 1);
  int nf = to_int(head, 2);
  if (ns < 0 || nf < 0) fail(head.number, "negative vertex count");
  Graph slim(ns);
  std::vector<std::vector<int>> fats(nf);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_words(l, 3);
    int a = to_int(l, 1);
    int b = to_int(l, 2);
    if (l.words[0] == "e") {
      try {
        slim.add_edge(a, b);
      } catch (const InputError& e) {
        fail(l.number, e.what());
      }
    } else if (l.words[0] == "f") {
      if (a < 0 || a >= nf) fail(l.number, "fat index out of range");
      if (b < 0 || b >= ns) fail(l.number, "slim index out of range");
      for (int x : fats[a]) {
        if (x == b) fail(l.number, "repeated fat edge");
      }
      fats[a].push_back(b);
    } else {
      fail(l.number, "unknown record '" + std::string(l.words[0]) + "'");
    }
  }
  std::vector<VertexSet> nbrs;
  for (int f = 0; f < nf; ++f) {
    if (fats[f].empty()) {
      throw InputError("fat vertex " + std::to_string(f) +
                       " has no slim neighbour");
    }
    nbrs.emplace_back(std::move(fats[f]));
  }
  return HoffmanGraph(std::move(slim), std::move(nbrs));
}

std::string serialize_hoffman(const HoffmanGraph& h) {
  std::ostringstream out;
  out << "hoffman " << h.slim_count() << " " << h.fat_count() << "\n";
  for (const Edge& e : h.slim().edges()) {
    out << "e " << e.u << " " << e.v << "\n";
  }
  for (int f = 0; f < h.fat_count(); ++f) {
    for (int x : h.fat_neighbors(f)) out << "f " << f << " " << x << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hoffman
