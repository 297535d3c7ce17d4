// Copyright 2026 The wchoose Authors
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

// Command-line front end.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "wchoose/certify.hpp"
#include "wchoose/error.hpp"
#include "wchoose/graph.hpp"
#include "wchoose/incidence.hpp"
#include "wchoose/oracle.hpp"
#include "wchoose/permanent.hpp"
#include "wchoose/polynomial.hpp"
#include "wchoose/serialize.hpp"

#ifndef WCHOOSE_FIXTURES
#define WCHOOSE_FIXTURES "fixtures"
#endif

namespace {

using namespace wchoose;

enum Exit { kOk = 0, kUsage = 1, kVerification = 2, kLimit = 3 };

Json index_json(const Index& idx) { return idx ? Json(*idx) : Json("inf"); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path to an edge-list file, or a generator spec such as "cycle:5".
Graph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_edge_list_file(arg);
  return generate_from_spec(arg);
}

IntMatrix load_matrix(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return matrix_from_json(Json::parse(text));
  std::vector<std::vector<long long>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream cells(line);
    std::vector<long long> row;
    std::string cell;
    while (cells >> cell) {
      if (cell == "|") continue;
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::logic_error&) {
        throw InputError("bad matrix entry: " + cell);
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) throw InputError("matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw InputError("expected a comma-separated list of integers, got " + text);
    }
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

// Report for any nice graph, using the sharper constructions where they apply.
BoundReport best_report(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  if (g.edge_count() == 0) return witness_edgeless(n);
  if (g.is_complete()) return relabel(witness_complete(n), g, identity);
  if (n >= 3 && g == cycle_graph(n)) return witness_cycle(n);
  return witness_edgemain(g);
}

struct Options {
  std::string graph;
  std::string second;
  std::string orient = "low_to_high";
  std::string matrix = "A";
  std::string caps;
  std::string method = "edgemain";
  std::string part;
  std::string twins_of;
  std::string lists;
  std::string universe = "-10..10";
  std::string corpus = WCHOOSE_FIXTURES "/connected_le7.graphs";
  bool joined = false;
  bool total = false;
  bool json = false;
  int n = 0;
  int k = 1;
  int l = 2;
  int trials = 100;
  int max_n = 6;
  double limit = 0;
  std::uint64_t seed = 1;
};

Digraph oriented(const Options& o) { return orient(load_graph(o.graph), parse_orient_rule(o.orient)); }

int cmd_matrices(const Options& o) {
  const auto bundle = build_bundle(oriented(o));
  if (o.json) {
    std::cout << Json{{"digraph", to_json(bundle.digraph)},
                      {"A", to_json(bundle.a)},
                      {"B", to_json(bundle.b)},
                      {"M", to_json(bundle.m_mat)}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "A_D\n" << format_grid(bundle.a) << "\nB_D\n" << format_grid(bundle.b) << "\nM_D\n"
            << format_grid(bundle.m_mat, bundle.a.cols());
  return kOk;
}

int cmd_per(const Options& o) {
  const IntMatrix m = load_matrix(o.graph);
  const Int p = m.is_square() ? per_square(m) : per_rect(m);
  if (o.json)
    std::cout << Json{{"per", to_json(p)}}.dump() << '\n';
  else
    std::cout << "per = " << p << '\n';
  return kOk;
}

int cmd_pind(const Options& o) {
  const auto bundle = build_bundle(oriented(o));
  if (o.matrix != "A" && o.matrix != "M") throw InputError("--matrix must be A or M");
  const bool use_m = o.matrix == "M";
  const IntMatrix& base = use_m ? bundle.m_mat : bundle.a;
  std::vector<int> caps;
  if (!o.caps.empty()) {
    const auto kl = parse_ints(o.caps);
    if (kl.size() != 2) throw InputError("--caps expects k,l");
    caps = use_m ? split_caps(bundle.a.cols(), kl[0], bundle.b.cols(), kl[1])
                 : std::vector<int>(static_cast<std::size_t>(base.cols()), kl[0]);
  }
  const auto res = pind(base, caps);
  if (o.json) {
    Json j{{"pind", index_json(res.value)}, {"witness", res.witness}};
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "pind = " << index_to_string(res.value) << '\n';
  if (res.finite()) {
    std::cout << "witness = " << join(res.witness) << '\n';
    if (use_m) {
      const bool edge_only = std::all_of(res.witness.begin(), res.witness.end(),
                                         [&](int c) { return c < bundle.a.cols(); });
      std::cout << "vertex columns used = " << (edge_only ? "no" : "yes") << '\n';
    }
  }
  return kOk;
}

int cmd_mind(const Options& o) {
  const Graph g = load_graph(o.graph);
  ExpansionOptions ex;
  if (o.limit > 0) ex.max_edges = static_cast<int>(o.limit);
  const Index mind = exact_mind_small(g, false, ex);
  std::optional<Index> tmind;
  if (o.total) tmind = exact_mind_small(g, true, ex);
  if (o.json) {
    Json j{{"mind", index_json(mind)}};
    if (tmind) j["tmind"] = index_json(*tmind);
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "mind = " << index_to_string(mind) << '\n';
  if (tmind) std::cout << "tmind = " << index_to_string(*tmind) << '\n';
  return kOk;
}

BoundReport certify_by(const Options& o) {
  if (o.graph.empty()) {
    if (o.method == "cycle") return witness_cycle(o.n);
    if (o.method == "complete") return witness_complete(o.n);
    throw InputError("certify needs a graph");
  }
  const Graph g = load_graph(o.graph);
  if (o.method == "cycle" || o.method == "complete") {
    const int n = g.vertex_count();
    const BoundReport r = o.method == "cycle" ? witness_cycle(n) : witness_complete(n);
    if (!(r.graph == g)) throw InputError("graph is not the standard " + o.method + " on " + std::to_string(n) + " vertices");
    return r;
  }
  if (o.method == "edgemain") return witness_edgemain(g);
  if (o.method == "search") {
    const Digraph d = orient(g, parse_orient_rule(o.orient));
    if (o.matrix == "A") {
      if (o.caps.empty()) return witness_search(d);
      return witness_search_capped(d, parse_ints(o.caps).at(0));
    }
    if (o.matrix != "M") throw InputError("--matrix must be A or M");
    std::vector<int> caps;
    if (!o.caps.empty()) {
      const auto kl = parse_ints(o.caps);
      if (kl.size() != 2) throw InputError("--caps expects k,l");
      caps = split_caps(g.edge_count(), kl[0], g.vertex_count(), kl[1]);
    }
    return witness_search(d, MatrixKind::M, caps);
  }
  if (o.method == "twins") {
    const auto U = parse_ints(o.twins_of);
    return witness_twins(best_report(g), U, o.joined);
  }
  if (o.method == "decomp") {
    const auto part = parse_ints(o.part);
    const Subgraph h = induced_subgraph(g, part);
    const BoundReport h_report = best_report(h.graph);
    std::vector<PlacedReport> rest;
    const Subgraph outside = remove_vertices(g, part);
    for (const auto& comp : components(outside.graph)) {
      if (comp.graph.edge_count() == 0) continue;
      std::vector<Vertex> map;
      for (const Vertex x : comp.vertex_map) map.push_back(outside.vertex_map[static_cast<std::size_t>(x)]);
      rest.push_back({best_report(comp.graph), map});
    }
    return witness_decomp(g, part, h_report, rest);
  }
  if (o.method == "product") {
    const Graph h = load_graph(o.second);
    return witness_product(g, h, best_report(h));
  }
  throw InputError("unknown method: " + o.method);
}

int cmd_certify(const Options& o) {
  const BoundReport r = certify_by(o);
  if (!verify(r.certificate)) throw VerificationError("certificate failed verification");
  std::cout << to_json(r).dump(o.json ? -1 : 2) << '\n';
  return kOk;
}

int cmd_check_lists(const Options& o) {
  const Graph g = load_graph(o.graph);
  const double limit = o.limit > 0 ? o.limit : kDefaultSearchLimit;
  if (!o.lists.empty()) {
    const Json j = Json::parse(slurp(o.lists));
    ListAssignment lists;
    auto decode = [](const Json& ls) {
      std::vector<std::vector<Rational>> out;
      for (const auto& l : ls) {
        std::vector<Rational> row;
        for (const auto& x : l) row.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>()));
        out.push_back(std::move(row));
      }
      return out;
    };
    lists.edge_lists = decode(j.at("edge_lists"));
    if (j.contains("vertex_lists")) lists.vertex_lists = decode(j.at("vertex_lists"));
    const auto w = find_weighting(g, lists, limit);
    if (o.json) {
      Json out{{"found", w.has_value()}};
      if (w) {
        Json weights = Json::array();
        for (const auto& x : w->edge_weights) weights.push_back(to_json(x));
        out["edge_weights"] = weights;
      }
      std::cout << out.dump() << '\n';
    } else if (w) {
      std::cout << "proper weighting:";
      for (const auto& x : w->edge_weights) std::cout << ' ' << x;
      std::cout << '\n';
    } else {
      std::cout << "no proper weighting\n";
    }
    return w ? kOk : kVerification;
  }
  const StressReport r = stress_choosability(g, o.k, o.l, o.trials, o.seed, parse_universe(o.universe), limit);
  if (o.json) {
    std::cout << to_json(r).dump() << '\n';
  } else {
    std::cout << "successes = " << r.successes << '/' << r.trials << '\n';
    if (r.limit_exceeded > 0) std::cout << "over limit = " << r.limit_exceeded << '\n';
    for (const auto& f : r.failures) std::cout << "failure: " << to_json(f).dump() << '\n';
  }
  return r.successes == r.trials ? kOk : kVerification;
}

int cmd_product(const Options& o) {
  const Graph g = load_graph(o.graph);
  const Graph h = load_graph(o.second);
  const BoundReport r = witness_product(g, h, best_report(h));
  if (o.json) {
    std::cout << to_json(r).dump() << '\n';
    return kOk;
  }
  std::cout << "vertices = " << r.graph.vertex_count() << "\nedges = " << r.graph.edge_count()
            << "\nbound = " << r.bound << "\nchoosability <= " << r.implied_choosability << '\n';
  return kOk;
}

int cmd_sweep(const Options& o) {
  const auto corpus = read_graph_corpus_file(o.corpus);
  Json rows = Json::array();
  if (!o.json)
    std::cout << "graph\tn\tm\tmind\ttmind\td2\tmaxdeg+degen\tcert\n";
  int id = -1;
  for (const auto& g : corpus) {
    ++id;
    if (g.vertex_count() > o.max_n || g.vertex_count() < 3 || !is_nice(g)) continue;
    const Index mind = exact_mind_small(g, false);
    std::optional<Index> tmind;
    if (g.edge_count() + g.vertex_count() <= 12) tmind = exact_mind_small(g, true);
    const int d2 = t_degeneracy(g, 2).value;
    const int dd = g.max_degree() + degeneracy(g);
    const int cert = witness_edgemain(g).bound;
    if (o.json) {
      rows.push_back({{"graph", id},
                      {"n", g.vertex_count()},
                      {"m", g.edge_count()},
                      {"mind", index_json(mind)},
                      {"tmind", tmind ? index_json(*tmind) : Json(nullptr)},
                      {"d2", d2},
                      {"maxdeg_plus_degeneracy", dd},
                      {"certificate_bound", cert}});
    } else {
      std::cout << id << '\t' << g.vertex_count() << '\t' << g.edge_count() << '\t' << index_to_string(mind) << '\t'
                << (tmind ? index_to_string(*tmind) : "-") << '\t' << d2 << '\t' << dd << '\t' << cert << '\n';
    }
  }
  if (o.json) std::cout << rows.dump(1) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds on list edge-weight choosability"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "Edge-list file or generator spec (e.g. cycle:5)")->required();
  };

  auto* matrices = app.add_subcommand("matrices", "Print A_D, B_D and M_D");
  graph_arg(matrices);
  matrices->add_option("--orient", o.orient, "Orientation rule");
  common(matrices);

  auto* per = app.add_subcommand("per", "Permanent of a matrix file");
  per->add_option("matrix", o.graph, "Whitespace grid or matrix JSON")->required();
  common(per);

  auto* pind_cmd = app.add_subcommand("pind", "Permanent index of A_D or M_D");
  graph_arg(pind_cmd);
  pind_cmd->add_option("--orient", o.orient, "Orientation rule");
  pind_cmd->add_option("--matrix", o.matrix, "A or M");
  pind_cmd->add_option("--caps", o.caps, "k,l: caps for edge and vertex columns");
  common(pind_cmd);

  auto* mind = app.add_subcommand("mind", "Exact monomial index by two routes");
  graph_arg(mind);
  mind->add_flag("--total", o.total, "Also compute tmind");
  mind->add_option("--limit", o.limit, "Largest edge count for the expansion");
  common(mind);

  auto* certify = app.add_subcommand("certify", "Build and verify a certificate, print it as JSON");
  certify->add_option("graph", o.graph, "Edge-list file or generator spec");
  certify->add_option("--method", o.method, "edgemain|twins|decomp|product|search|cycle|complete");
  certify->add_option("-n", o.n, "Size for cycle/complete");
  certify->add_option("--orient", o.orient, "Orientation rule (search)");
  certify->add_option("--matrix", o.matrix, "A or M (search)");
  certify->add_option("--caps", o.caps, "Caps k or k,l (search)");
  certify->add_option("--twins-of", o.twins_of, "U for the twin construction, e.g. 0,2");
  certify->add_flag("--joined", o.joined, "Join the twins");
  certify->add_option("--part", o.part, "Vertices of the decomposed part, e.g. 0,1,2");
  certify->add_option("--with", o.second, "Second factor (product)");
  common(certify);

  auto* lists = app.add_subcommand("check-lists", "Search list weightings or sample random list assignments");
  graph_arg(lists);
  lists->add_option("--lists", o.lists, "JSON list assignment; without it random lists are sampled");
  lists->add_option("-k", o.k, "Vertex list size (0: edge weights only)");
  lists->add_option("-l", o.l, "Edge list size");
  lists->add_option("--trials", o.trials, "Number of random assignments");
  lists->add_option("--seed", o.seed, "Random seed");
  lists->add_option("--universe", o.universe, "lo..hi or rational:lo..hi");
  lists->add_option("--limit", o.limit, "Search-space limit per assignment");
  common(lists);

  auto* product = app.add_subcommand("product", "Certify a Cartesian product");
  graph_arg(product);
  product->add_option("second", o.second, "Regular second factor with a 2-factor")->required();
  common(product);

  auto* sweep = app.add_subcommand("sweep", "Conformance table over the small-graph corpus");
  sweep->add_option("--corpus", o.corpus, "Graph corpus file");
  sweep->add_option("--max-n", o.max_n, "Largest vertex count");
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*matrices) return cmd_matrices(o);
    if (*per) return cmd_per(o);
    if (*pind_cmd) return cmd_pind(o);
    if (*mind) return cmd_mind(o);
    if (*certify) return cmd_certify(o);
    if (*lists) return cmd_check_lists(o);
    if (*product) return cmd_product(o);
    if (*sweep) return cmd_sweep(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
