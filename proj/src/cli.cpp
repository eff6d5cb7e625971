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


#include "hoffman/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "CLI11.hpp"

#include "hoffman/assoc.hpp"
#include "hoffman/certificate.hpp"
#include "hoffman/error.hpp"
#include "hoffman/families.hpp"
#include "hoffman/forbidden.hpp"
#include "hoffman/io.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

using Json = nlohmann::ordered_json;

double report_number(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

constexpr int kSchema = 1;

Json spectrum_json(const Spectrum& s) {
  Json arr = Json::array();
  for (auto [value, mult] : s.pairs) {
    arr.push_back({{"value", report_number(value)}, {"multiplicity", mult}});
  }
  return arr;
}

Json set_json(const VertexSet& s) { return Json(s.members()); }

Json hits_json(const std::vector<ForbiddenHit>& hits) {
  Json arr = Json::array();
  for (const auto& h : hits) {
    arr.push_back({{"indices", set_json(h.indices)},
                   {"pattern", h.pattern.name()}});
  }
  return arr;
}

int fatness(const HoffmanGraph& h) {
  if (h.slim_count() == 0) return 0;
  int s = h.fat_degree(0);
  for (int x = 1; x < h.slim_count(); ++x) s = std::min(s, h.fat_degree(x));
  return s;
}

bool all_cherry(const LineCertificate& c) {
  for (const auto& tag : c.part_tags) {
    if (tag.member != 0) return false;
  }
  return true;
}

Json certificate_json(const HoffmanGraph& h, const CertifyResult& res, int t) {
  Json j;
  j["ok"] = res.ok();
  j["t"] = t;
  j["hits"] = hits_json(res.hits);
  j["failures"] = res.failures;
  if (!res.ok()) return j;
  const auto& c = *res.certificate;
  Json added = Json::array();
  for (const auto& f : c.added_fats) added.push_back(set_json(f));
  j["added_fats"] = added;
  Json parts = Json::array();
  for (std::size_t i = 0; i < c.parts.parts.size(); ++i) {
    parts.push_back({{"vertices", set_json(c.parts.parts[i])},
                     {"member", c.part_tags[i].member},
                     {"induced", c.part_tags[i].induced}});
  }
  j["parts"] = parts;
  j["witness_fat_count"] = c.witness.fat_count();
  j["all_cherry"] = all_cherry(c);
  auto v = verify_certificate(h, c, t);
  j["verify"] = {{"ok", v.ok()}, {"code", to_string(v.code)},
                 {"detail", v.detail}};
  return j;
}

Json hypergraph_json(const LineCertificate& c, int t) {
  Json j;
  try {
    auto hg = hypergraph_from_cover(c.witness, t);
    j["extracted"] = true;
    j["vertex_count"] = hg.vertex_count;
    j["edge_count"] = hg.edges.size();
    j["uniformity"] = t + 1;
    j["linear_uniform"] = is_linear_uniform(hg, t + 1);
    j["intersection_graph_equal"] =
        intersection_graph(hg) == c.witness.slim();
  } catch (const InputError& e) {
    j["extracted"] = false;
    j["reason"] = e.what();
  }
  return j;
}

Json head(const std::string& command) {
  return Json{{"schema", kSchema}, {"command", command}};
}

Json graph_summary(const Graph& g) {
  Json j{{"order", g.order()}, {"size", g.size()}};
  bool reg = is_regular(g);
  j["regular"] = reg;
  if (reg && g.order() > 0) j["degree"] = g.degree(0);
  return j;
}

enum class FileKind { graph, hoffman };

FileKind sniff(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i < text.size() && text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    break;
  }
  return text.compare(i, 7, "hoffman") == 0 ? FileKind::hoffman
                                            : FileKind::graph;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw InputError("expected an integer, got '" + s + "'");
  return v;
}

std::string generate_text(const std::vector<std::string>& words) {
  if (words.empty()) throw InputError("gen needs a family name");
  const std::string& fam = words[0];
  std::vector<int> p;
  for (std::size_t i = 1; i < words.size(); ++i) p.push_back(to_int(words[i]));
  auto need = [&](std::size_t k) {
    if (p.size() != k) {
      throw InputError(fam + " takes " + std::to_string(k) + " parameters");
    }
  };
  if (fam == "hamming") { need(2); return serialize_graph(hamming(p[0], p[1])); }
  if (fam == "johnson") { need(2); return serialize_graph(johnson(p[0], p[1])); }
  if (fam == "grid") { need(2); return serialize_graph(grid(p[0], p[1])); }
  if (fam == "grid2") {
    need(2);
    return serialize_graph(clique_extension_2(grid(p[0], p[1])));
  }
  if (fam == "complete") { need(1); return serialize_graph(complete(p[0])); }
  if (fam == "cycle") { need(1); return serialize_graph(cycle(p[0])); }
  if (fam == "path") { need(1); return serialize_graph(path(p[0])); }
  if (fam == "bipartite") {
    need(2);
    return serialize_graph(complete_bipartite(p[0], p[1]));
  }
  if (fam == "petersen") { need(0); return serialize_graph(petersen()); }
  if (fam == "ktilde") { need(1); return serialize_graph(k_tilde(p[0])); }
  if (fam == "cherry") { need(1); return serialize_hoffman(cherry(p[0])); }
  if (fam == "gt") {
    need(2);
    const auto& fam_t = gt_family(p[0]);
    if (p[1] < 0 || p[1] >= static_cast<int>(fam_t.size())) {
      throw InputError("family index out of range");
    }
    return serialize_hoffman(fam_t[p[1]]);
  }
  throw InputError("unknown family '" + fam + "'");
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

}  // namespace

Analysis analyze_graph(const Graph& g, const AnalyzeOptions& opts) {
  if (opts.t < 1) throw InputError("--t must be positive");
  Analysis a;
  Json& r = a.report;
  r = head("analyze");
  r["input"] = graph_summary(g);

  int t = opts.t;
  int m = opts.m > 0 ? opts.m : m_of_t(t);
  int n = opts.n > 0 ? opts.n : (m + 1) * (m + 1);
  r["params"] = {{"t", t}, {"m", m}, {"n", n},
                 {"mode", opts.relaxed ? "relaxed" : "strict"}};

  bool negative = false;
  if (opts.with_spectrum && g.order() > 0) {
    auto ev = eigenvalues(adjacency_matrix(g));
    double lmin = ev.back();
    bool ok = lmin >= -t - 1 - 1e-9;
    r["spectrum"] = spectrum_json(group_spectrum(ev, 1e-6));
    r["lambda_min"] = report_number(lmin);
    r["lambda_min_ok"] = ok;
    negative |= !ok;
  }

  if (auto w = find_induced_k_tilde(g, m)) {
    r["k_tilde_witness"] = *w;
    r["associated"] = nullptr;
    a.exit_code = kExitNegative;
    return a;
  }

  auto assoc = associate(g, m, n,
                         opts.relaxed ? ClassMode::relaxed : ClassMode::strict);
  const HoffmanGraph& h = assoc.graph;
  Json sizes = Json::array();
  for (const auto& q : assoc.quasi_cliques) sizes.push_back(q.vertices.size());
  auto cond = quasi_clique_conditions(g, assoc.quasi_cliques, t);
  int fat = fatness(h);
  r["associated"] = {
      {"clique_count", assoc.clique_count},
      {"class_count", assoc.classes.size()},
      {"fat_count", h.fat_count()},
      {"quasi_clique_sizes", sizes},
      {"fatness", fat},
      {"warnings", assoc.warnings},
      {"conditions",
       {{"max_complement_degree", cond.max_complement_degree},
        {"max_intersection", cond.max_intersection},
        {"complement_bound", t * t},
        {"intersection_bound", t},
        {"complement_ok", cond.complement_ok},
        {"intersection_ok", cond.intersection_ok}}}};

  auto hits = scan_forbidden(special_matrix(h), t);
  r["forbidden_hits"] = hits_json(hits);
  negative |= !hits.empty();

  if (!is_t_fat(h, t)) {
    r["certificate"] = {{"ok", false},
                        {"t", t},
                        {"failures", {"associated Hoffman graph is only " +
                                      std::to_string(fat) + "-fat"}}};
    r["hypergraph"] = {{"extracted", false}, {"reason", "no certificate"}};
    a.exit_code = kExitNegative;
    return a;
  }
  auto res = certify_line(h, t);
  r["certificate"] = certificate_json(h, res, t);
  if (res.ok() && all_cherry(*res.certificate)) {
    r["hypergraph"] = hypergraph_json(*res.certificate, t);
  } else {
    r["hypergraph"] = {{"extracted", false},
                       {"reason", res.ok() ? "certificate has non-cherry parts"
                                           : "no certificate"}};
  }
  negative |= !res.ok();
  if (res.ok() && !r["certificate"]["verify"]["ok"].get<bool>()) {
    negative = true;
  }
  a.exit_code = negative ? kExitNegative : kExitOk;
  return a;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hoffman graph and spectral toolkit", "hoffman"};
  app.require_subcommand(1);

  std::vector<std::string> gen_words;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated graph file");
  gen->add_option("family", gen_words,
                  "hamming D q | johnson v p | grid t1 t2 | grid2 t1 t2 | "
                  "complete n | cycle n | path n | bipartite a b | petersen | "
                  "ktilde m | cherry t | gt t index")
      ->required();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::string file, file2;
  double tol = 1e-6;
  auto* spec = app.add_subcommand("spectrum", "Spectrum of a graph or of the "
                                              "special matrix of a Hoffman graph");
  spec->add_option("file", file)->required();
  spec->add_option("--tol", tol, "Grouping tolerance");

  auto* cosp = app.add_subcommand("cospectral", "Compare two spectra");
  cosp->add_option("file1", file)->required();
  cosp->add_option("file2", file2)->required();
  cosp->add_option("--tol", tol, "Eigenvalue tolerance");

  AnalyzeOptions opts;
  auto* ana = app.add_subcommand("analyze", "Full line-graph analysis");
  ana->add_option("file", file)->required();
  ana->add_option("--t", opts.t, "Target: lambda_min >= -t-1")->required();
  ana->add_option("--m", opts.m, "Clique relation parameter (default m(t))");
  ana->add_option("--n", opts.n, "Minimum clique order (default (m+1)^2)");
  ana->add_flag("--relaxed", opts.relaxed,
                "Allow n < (m+1)^2 using the transitive closure");
  bool no_spectrum = false;
  ana->add_flag("--no-spectrum", no_spectrum, "Skip the eigenvalue step");

  int cert_t = 1;
  auto* cert = app.add_subcommand("certify", "Line certificate for a Hoffman graph");
  cert->add_option("file", file)->required();
  cert->add_option("--t", cert_t)->required();

  int plex_p = 1;
  int plex_limit = 64;
  auto* plex = app.add_subcommand("plexbound", "Spectral bound on (p+1)-plexes");
  plex->add_option("file", file)->required();
  plex->add_option("--p", plex_p)->required();
  plex->add_option("--exhaustive-limit", plex_limit,
                   "Largest order searched exhaustively");

  std::vector<std::string> argv_store{"hoffman"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      write_text(gen_out, generate_text(gen_words), out);
      return kExitOk;
    }
    if (*spec) {
      std::string text = read_file(file);
      Json r = head("spectrum");
      std::vector<double> ev;
      if (sniff(text) == FileKind::hoffman) {
        auto h = parse_hoffman(text);
        r["input"] = {{"kind", "hoffman"},
                      {"slim", h.slim_count()},
                      {"fat", h.fat_count()}};
        if (h.slim_count() > 0) ev = eigenvalues(special_matrix(h).to_sym());
      } else {
        auto g = parse_graph(text);
        r["input"] = graph_summary(g);
        if (g.order() > 0) ev = eigenvalues(adjacency_matrix(g));
      }
      r["spectrum"] = spectrum_json(group_spectrum(ev, tol));
      if (!ev.empty()) {
        r["lambda_max"] = report_number(ev.front());
        r["lambda_min"] = report_number(ev.back());
      }
      out << r.dump(2) << "\n";
      return kExitOk;
    }
    if (*cosp) {
      auto a = parse_graph(read_file(file));
      auto b = parse_graph(read_file(file2));
      if (a.order() != b.order()) {
        throw InputError("graphs have different orders (" +
                         std::to_string(a.order()) + " and " +
                         std::to_string(b.order()) + ")");
      }
      auto ea = eigenvalues(adjacency_matrix(a));
      auto eb = eigenvalues(adjacency_matrix(b));
      double diff = 0;
      for (std::size_t i = 0; i < ea.size(); ++i) {
        diff = std::max(diff, std::abs(ea[i] - eb[i]));
      }
      Json r = head("cospectral");
      r["order"] = a.order();
      r["cospectral"] = diff <= tol;
      r["max_abs_diff"] = report_number(diff);
      r["tol"] = report_number(tol);
      out << r.dump(2) << "\n";
      return diff <= tol ? kExitOk : kExitNegative;
    }
    if (*ana) {
      opts.with_spectrum = !no_spectrum;
      auto result = analyze_graph(parse_graph(read_file(file)), opts);
      out << result.report.dump(2) << "\n";
      return result.exit_code;
    }
    if (*cert) {
      auto h = parse_hoffman(read_file(file));
      auto res = certify_line(h, cert_t);
      Json r = head("certify");
      r["input"] = {{"slim", h.slim_count()}, {"fat", h.fat_count()}};
      r["certificate"] = certificate_json(h, res, cert_t);
      if (res.ok()) {
        r["witness"] = serialize_hoffman(res.certificate->witness);
      }
      out << r.dump(2) << "\n";
      bool ok = res.ok() && r["certificate"]["verify"]["ok"].get<bool>();
      return ok ? kExitOk : kExitNegative;
    }
    if (*plex) {
      auto g = parse_graph(read_file(file));
      if (!is_regular(g) || g.order() == 0) {
        throw InputError("plexbound needs a nonempty regular graph");
      }
      if (plex_p < 0) throw InputError("--p must be non-negative");
      auto ev = eigenvalues(adjacency_matrix(g));
      int k = g.degree(0);
      double theta2 = ev.size() > 1 ? ev[1] : ev[0];
      double bound = plex_bound(g.order(), k, theta2, plex_p);
      Json r = head("plexbound");
      r["input"] = graph_summary(g);
      r["p"] = plex_p;
      r["plex"] = plex_p + 1;
      r["theta2"] = report_number(theta2);
      r["bound"] = report_number(bound);
      bool ok = true;
      if (g.order() <= plex_limit) {
        int best = max_plex_order(g, plex_p + 1);
        r["max_plex_order"] = best;
        ok = best <= bound + 1e-9;
        r["within_bound"] = ok;
      } else {
        r["max_plex_order"] = nullptr;
      }
      out << r.dump(2) << "\n";
      return ok ? kExitOk : kExitNegative;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitInput;
}

}  // namespace hoffman
