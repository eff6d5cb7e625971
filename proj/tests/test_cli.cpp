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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "hoffman/certificate.hpp"
#include "hoffman/assoc.hpp"
#include "hoffman/cli.hpp"
#include "hoffman/error.hpp"
#include "hoffman/families.hpp"
#include "hoffman/forbidden.hpp"
#include "hoffman/io.hpp"

using namespace hoffman;
using Json = nlohmann::ordered_json;

namespace {

const std::string kData = HOFFMAN_EXAMPLES_DIR;

struct Ran {
  int code;
  std::string out;
  std::string err;
};

Ran call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "hoffman_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

std::string error_of(std::string_view text, bool hoffman_format = false) {
  try {
    if (hoffman_format) {
      parse_hoffman(text);
    } else {
      parse_graph(text);
    }
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph files") {
  CHECK(parse_graph("graph 3\ne 0 1\ne 1 2") == path(3));
  CHECK(parse_graph("# comment\ngraph 3 # three\r\ne 0 1\n\ne 1 2\n") == path(3));
  CHECK(error_of("graph 2\ne 0 0").find("line 2") != std::string::npos);
  CHECK(error_of("graph 2\ne 0 1\ne 1 0").find("line 3") != std::string::npos);
  CHECK(error_of("graph 2\ne 0 2").find("line 2") != std::string::npos);
  CHECK(error_of("graph x").find("line 1") != std::string::npos);
  CHECK(error_of("graph 2\nv 0 1").find("line 2") != std::string::npos);
  CHECK(error_of("graph 2\ne 0").find("line 2") != std::string::npos);
  CHECK_FALSE(error_of("").empty());
  CHECK_FALSE(error_of("edges 3").empty());
}

TEST_CASE("graph golden round trip") {
  std::string text = read_file(kData + "/petersen.graph");
  auto g = parse_graph(text);
  CHECK(g == petersen());
  CHECK(serialize_graph(g) == text);
  CHECK(parse_graph(serialize_graph(hamming(3, 3))) == hamming(3, 3));
}

TEST_CASE("hoffman files") {
  auto c = parse_hoffman("hoffman 1 2\nf 0 0\nf 1 0\n");
  CHECK(c == cherry(2));
  CHECK(error_of("hoffman 2 2\nf 0 0\n", true).find("fat vertex 1") !=
        std::string::npos);
  CHECK(error_of("hoffman 2 1\nf 0 5\n", true).find("line 2") != std::string::npos);
  CHECK(error_of("hoffman 2 1\nf 0 1\nf 0 1\n", true).find("line 3") !=
        std::string::npos);
  CHECK(error_of("hoffman 2 1\nx 0 1\n", true).find("line 2") != std::string::npos);

  std::string text = read_file(kData + "/pair_adjacent.hoffman");
  auto h = parse_hoffman(text);
  bool member = false;
  for (const auto& m : gt_family(2)) member = member || hoffman_isomorphic(h, m);
  CHECK(member);
  CHECK(parse_hoffman(serialize_hoffman(h)) == h);
  CHECK(serialize_hoffman(h) == text.substr(text.find('\n') + 1));
  for (const auto& m : gt_family(2)) CHECK(parse_hoffman(serialize_hoffman(m)) == m);
}

TEST_CASE("number formatting") {
  CHECK(report_number(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(report_number(-1e-300 * 1e-300)));
  CHECK(report_number(1.0 / 3.0) == 0.333333333333);
  CHECK(report_number(-2.9999999999999996) == -3.0);
}

TEST_CASE("gen") {
  auto r = call({"gen", "hamming", "3", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == serialize_graph(hamming(3, 2)));
  CHECK(call({"gen", "petersen"}).out == read_file(kData + "/petersen.graph"));
  CHECK(call({"gen", "cherry", "3"}).out == serialize_hoffman(cherry(3)));
  CHECK(call({"gen", "grid2", "3", "3"}).code == 0);
  CHECK(call({"gen", "hamming", "3"}).code == kExitInput);
  CHECK(call({"gen", "nothing"}).code == kExitInput);
  CHECK(call({"gen", "hamming", "30", "30"}).code == kExitResource);
  CHECK(call({"gen", "johnson", "6", "three"}).code == kExitInput);
}

TEST_CASE("spectrum") {
  auto file = scratch("j63.graph", serialize_graph(johnson(6, 3)));
  auto r = call({"spectrum", file});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["schema"] == 1);
  auto s = j["spectrum"];
  REQUIRE(s.size() == 4);
  double vals[] = {9, 3, -1, -3};
  int mults[] = {1, 5, 9, 5};
  for (int i = 0; i < 4; ++i) {
    CHECK(s[i]["value"].get<double>() == vals[i]);
    CHECK(s[i]["multiplicity"].get<int>() == mults[i]);
  }
  CHECK(j["lambda_min"].get<double>() == -3);

  auto hr = call({"spectrum", kData + "/pair_adjacent.hoffman"});
  REQUIRE(hr.code == 0);
  auto hj = Json::parse(hr.out);
  CHECK(hj["input"]["kind"] == "hoffman");
  CHECK(hj["lambda_min"].get<double>() == -3);
  CHECK(call({"spectrum", "/nonexistent/file"}).code == kExitInput);
}

TEST_CASE("cospectral") {
  Graph star_plus(5);
  star_plus.add_edge(0, 1);
  star_plus.add_edge(1, 2);
  star_plus.add_edge(2, 3);
  star_plus.add_edge(3, 0);
  auto a = scratch("star.graph", serialize_graph(complete_bipartite(1, 4)));
  auto b = scratch("c4k1.graph", serialize_graph(star_plus));
  auto c = scratch("grid33.graph", serialize_graph(grid(3, 3)));
  auto d = scratch("j42.graph", serialize_graph(johnson(4, 2)));
  auto yes = call({"cospectral", a, b});
  CHECK(yes.code == 0);
  CHECK(Json::parse(yes.out)["cospectral"] == true);
  CHECK(call({"cospectral", c, d}).code == kExitInput);
  auto no = call({"cospectral", a, scratch("p5.graph", serialize_graph(path(5)))});
  CHECK(no.code == kExitNegative);
  CHECK(Json::parse(no.out)["cospectral"] == false);
}

TEST_CASE("analyze") {
  auto file = scratch("h39.graph", serialize_graph(hamming(3, 9)));
  auto r = call({"analyze", file, "--t", "2", "--m", "2", "--n", "9"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["lambda_min_ok"] == true);
  CHECK(j["associated"]["fatness"] == 3);
  CHECK(j["associated"]["class_count"] == 243);
  CHECK(j["associated"]["conditions"]["max_complement_degree"] == 0);
  CHECK(j["associated"]["conditions"]["max_intersection"] == 1);
  CHECK(j["forbidden_hits"].empty());
  CHECK(j["certificate"]["ok"] == true);
  CHECK(j["certificate"]["all_cherry"] == true);
  CHECK(j["certificate"]["verify"]["ok"] == true);
  CHECK(j["hypergraph"]["extracted"] == true);
  CHECK(j["hypergraph"]["linear_uniform"] == true);
  CHECK(j["hypergraph"]["intersection_graph_equal"] == true);
  CHECK(j["hypergraph"]["edge_count"] == 729);

  auto again = call({"analyze", file, "--t", "2", "--m", "2", "--n", "9"});
  CHECK(again.out == r.out);

  CHECK(call({"analyze", file, "--t", "2", "--m", "2", "--n", "4"}).code ==
        kExitInput);
  CHECK(call({"analyze", file, "--t", "2", "--m", "2", "--n", "4", "--relaxed"})
            .code == 0);

  auto kt = scratch("kt.graph", serialize_graph(k_tilde(2)));
  auto neg = call({"analyze", kt, "--t", "2", "--m", "2", "--n", "9"});
  CHECK(neg.code == kExitNegative);
  CHECK(Json::parse(neg.out)["k_tilde_witness"].size() == 5);

  auto c5 = scratch("c5.graph", serialize_graph(cycle(5)));
  auto none = call({"analyze", c5, "--t", "1"});
  CHECK(none.code == kExitNegative);
  auto nj = Json::parse(none.out);
  CHECK(nj["params"]["m"] == 4);
  CHECK(nj["params"]["n"] == 25);
  CHECK(nj["associated"]["fat_count"] == 0);
  CHECK(call({"analyze", c5}).code == kExitInput);
}

TEST_CASE("certify") {
  auto pair = call({"certify", kData + "/pair_adjacent.hoffman", "--t", "2"});
  REQUIRE(pair.code == 0);
  auto j = Json::parse(pair.out);
  CHECK(j["certificate"]["ok"] == true);

  // rebuild the certificate from the report and check it on its own
  auto h = parse_hoffman(read_file(kData + "/pair_adjacent.hoffman"));
  LineCertificate cert;
  cert.t = 2;
  cert.witness = parse_hoffman(j["witness"].get<std::string>());
  for (const auto& f : j["certificate"]["added_fats"]) {
    cert.added_fats.emplace_back(f.get<std::vector<int>>());
  }
  for (const auto& p : j["certificate"]["parts"]) {
    VertexSet part(p["vertices"].get<std::vector<int>>());
    cert.parts.parts.push_back(part);
    cert.parts.part_graphs.push_back(generated_subgraph(cert.witness, part));
    cert.part_tags.push_back({p["member"].get<int>(), p["induced"].get<bool>()});
  }
  CHECK(verify_certificate(h, cert, 2).ok());

  auto bad = scratch("c4.hoffman", serialize_hoffman(cherry(4)));
  auto neg = call({"certify", bad, "--t", "2"});
  CHECK(neg.code == kExitNegative);
  CHECK(Json::parse(neg.out)["certificate"]["hits"].size() == 1);
  auto thin = scratch("c1.hoffman", serialize_hoffman(cherry(1)));
  CHECK(call({"certify", thin, "--t", "2"}).code == kExitInput);
}

TEST_CASE("plexbound") {
  auto r = call({"plexbound", kData + "/petersen.graph", "--p", "0"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["bound"].get<double>() == 2.5);
  CHECK(j["max_plex_order"] == 2);
  auto r1 = Json::parse(call({"plexbound", kData + "/petersen.graph", "--p", "1"}).out);
  CHECK(r1["bound"].get<double>() == 3.75);
  CHECK(r1["max_plex_order"] == 3);
  auto c4 = scratch("c4.graph", serialize_graph(cycle(4)));
  auto rc = Json::parse(call({"plexbound", c4, "--p", "1"}).out);
  CHECK(rc["bound"].get<double>() == 4);
  CHECK(rc["max_plex_order"] == 4);
  auto p3 = scratch("p3.graph", serialize_graph(path(3)));
  CHECK(call({"plexbound", p3, "--p", "1"}).code == kExitInput);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == kExitInput);
  CHECK(call({"frobnicate"}).code == kExitInput);
  CHECK(call({"--help"}).code == 0);
}
