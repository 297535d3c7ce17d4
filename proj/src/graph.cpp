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

#include "wchoose/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "wchoose/error.hpp"

namespace wchoose {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long long parse_nonnegative(std::string_view token, int line_no) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0)
    throw InputError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Builds one graph from accumulated lines; `declared` is the n= header, -1 if absent.
Graph finish_graph(long long declared, const std::vector<std::pair<long long, long long>>& pairs,
                   int line_no) {
  long long n = 0;
  for (const auto& [a, b] : pairs) n = std::max({n, a + 1, b + 1});
  if (declared >= 0) {
    if (declared < n)
      throw InputError("line " + std::to_string(line_no) + ": header n=" + std::to_string(declared) +
                       " is smaller than the largest vertex id");
    n = declared;
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n_), {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw InputError("edge " + std::to_string(i) + " has an endpoint outside 0.." + std::to_string(n_ - 1));
    if (e.u == e.v) throw InputError("edge " + std::to_string(i) + " is a loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert({e.u, e.v}).second)
      throw InputError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<EdgeId>(i)});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<EdgeId>(i)});
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  const auto& list = adj_[static_cast<std::size_t>(degree(a) <= degree(b) ? a : b)];
  const Vertex target = degree(a) <= degree(b) ? b : a;
  for (const auto& inc : list)
    if (inc.neighbor == target) return inc.edge;
  return std::nullopt;
}

bool Graph::is_complete() const {
  return static_cast<long long>(edges_.size()) == static_cast<long long>(n_) * (n_ - 1) / 2;
}

Digraph::Digraph(Graph g, std::vector<Arc> arcs) : graph_(std::move(g)), arcs_(std::move(arcs)) {
  if (static_cast<int>(arcs_.size()) != graph_.edge_count())
    throw InputError("orientation has " + std::to_string(arcs_.size()) + " arcs for " +
                     std::to_string(graph_.edge_count()) + " edges");
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    const auto& ed = graph_.edge(e);
    const auto& a = arcs_[static_cast<std::size_t>(e)];
    const bool same = (a.tail == ed.u && a.head == ed.v) || (a.tail == ed.v && a.head == ed.u);
    if (!same)
      throw InputError("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " does not match edge " +
                       std::to_string(ed.u) + " " + std::to_string(ed.v));
  }
}

Digraph Digraph::reversed() const {
  auto arcs = arcs_;
  for (auto& a : arcs) std::swap(a.tail, a.head);
  return Digraph(graph_, std::move(arcs));
}

Graph parse_edge_list(std::string_view text) {
  auto graphs = parse_graph_corpus(text);
  if (graphs.size() > 1) throw InputError("edge list contains more than one n= header");
  if (graphs.empty()) return Graph();
  return std::move(graphs.front());
}

std::vector<Graph> parse_graph_corpus(std::string_view text) {
  std::vector<Graph> out;
  long long declared = -1;
  std::vector<std::pair<long long, long long>> pairs;
  bool open = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("n=")) {
      if (open) out.push_back(finish_graph(declared, pairs, line_no));
      pairs.clear();
      declared = parse_nonnegative(trim(line.substr(2)), line_no);
      open = true;
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != 2)
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v', got '" + std::string(line) + "'");
    const auto a = parse_nonnegative(tokens[0], line_no);
    const auto b = parse_nonnegative(tokens[1], line_no);
    if (a == b) throw InputError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(a));
    if (!open) {
      declared = -1;
      open = true;
    }
    pairs.emplace_back(a, b);
  }
  if (open) out.push_back(finish_graph(declared, pairs, line_no));
  return out;
}

Graph read_edge_list_file(const std::string& path) { return parse_edge_list(slurp(path)); }

std::vector<Graph> read_graph_corpus_file(const std::string& path) { return parse_graph_corpus(slurp(path)); }

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

bool is_nice(const Graph& g) {
  for (const auto& c : components(g))
    if (c.graph.vertex_count() == 2 && c.graph.edge_count() == 1) return false;
  return true;
}

bool is_connected(const Graph& g) { return g.vertex_count() <= 1 || components(g).size() == 1; }

std::optional<int> common_degree(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::vector<Subgraph> components(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::vector<Vertex>> groups;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(groups.size());
    groups.emplace_back();
    std::vector<Vertex> stack{s};
    label[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      groups.back().push_back(x);
      for (const auto& inc : g.incident(x)) {
        if (label[static_cast<std::size_t>(inc.neighbor)] < 0) {
          label[static_cast<std::size_t>(inc.neighbor)] = id;
          stack.push_back(inc.neighbor);
        }
      }
    }
  }
  std::vector<Subgraph> out;
  out.reserve(groups.size());
  for (auto& grp : groups) {
    std::sort(grp.begin(), grp.end());
    out.push_back(induced_subgraph(g, grp));
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (local[static_cast<std::size_t>(v)] >= 0) throw InputError("vertex " + std::to_string(v) + " listed twice");
    local[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  std::vector<EdgeId> edge_map;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const int a = local[static_cast<std::size_t>(ed.u)];
    const int b = local[static_cast<std::size_t>(ed.v)];
    if (a >= 0 && b >= 0) {
      edges.push_back({a, b});
      edge_map.push_back(e);
    }
  }
  return Subgraph{Graph(static_cast<int>(vertices.size()), std::move(edges)),
                  std::vector<Vertex>(vertices.begin(), vertices.end()), std::move(edge_map)};
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(static_cast<std::size_t>(g.vertex_count()), false);
  for (const Vertex v : removed) gone.at(static_cast<std::size_t>(v)) = true;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph add_twins(const Graph& g, std::span<const Vertex> U, bool joined) {
  if (U.empty()) throw InputError("add_twins: U must be nonempty");
  std::vector<Vertex> sorted(U.begin(), U.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("add_twins: U has repeated vertices");
  const int n = g.vertex_count();
  for (const Vertex x : sorted)
    if (x < 0 || x >= n) throw InputError("add_twins: vertex " + std::to_string(x) + " not in the graph");
  const Vertex a = n;
  const Vertex b = n + 1;
  std::vector<Edge> edges;
  if (joined) edges.push_back({a, b});
  for (const Vertex x : sorted) {
    edges.push_back({x, a});
    edges.push_back({x, b});
  }
  edges.insert(edges.end(), g.edges().begin(), g.edges().end());
  return Graph(n + 2, std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int nh = h.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.vertex_count() * h.edge_count() + nh * g.edge_count()));
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (const auto& e : h.edges()) edges.push_back({a * nh + e.u, a * nh + e.v});
  for (const auto& e : g.edges())
    for (Vertex x = 0; x < nh; ++x) edges.push_back({e.u * nh + x, e.v * nh + x});
  return Graph(g.vertex_count() * nh, std::move(edges));
}

std::vector<EdgeId> min_edge_cut_around(const Graph& g, std::span<const Vertex> S) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  for (const Vertex v : S) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  std::vector<EdgeId> cut;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in[static_cast<std::size_t>(g.edge(e).u)] != in[static_cast<std::size_t>(g.edge(e).v)]) cut.push_back(e);
  return cut;
}

bool is_two_factor(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  std::set<EdgeId> unique;
  for (const EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count() || !unique.insert(e).second) return false;
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

namespace {

// Vertices are settled in increasing order; edges to lower vertices are
// already decided when vertex v is reached.
bool extend_two_factor(const Graph& g, Vertex v, std::vector<int>& deg, std::vector<EdgeId>& chosen) {
  if (v == g.vertex_count()) return true;
  const int need = 2 - deg[static_cast<std::size_t>(v)];
  if (need < 0) return false;
  std::vector<Incidence> forward;
  for (const auto& inc : g.incident(v))
    if (inc.neighbor > v && deg[static_cast<std::size_t>(inc.neighbor)] < 2) forward.push_back(inc);
  std::sort(forward.begin(), forward.end(), [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
  if (static_cast<int>(forward.size()) < need) return false;
  if (need == 0) return extend_two_factor(g, v + 1, deg, chosen);
  const auto k = forward.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (need == 1) {
      const auto& x = forward[i];
      ++deg[static_cast<std::size_t>(v)];
      ++deg[static_cast<std::size_t>(x.neighbor)];
      chosen.push_back(x.edge);
      if (extend_two_factor(g, v + 1, deg, chosen)) return true;
      chosen.pop_back();
      --deg[static_cast<std::size_t>(v)];
      --deg[static_cast<std::size_t>(x.neighbor)];
      continue;
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& x = forward[i];
      const auto& y = forward[j];
      deg[static_cast<std::size_t>(v)] += 2;
      ++deg[static_cast<std::size_t>(x.neighbor)];
      ++deg[static_cast<std::size_t>(y.neighbor)];
      chosen.push_back(x.edge);
      chosen.push_back(y.edge);
      if (extend_two_factor(g, v + 1, deg, chosen)) return true;
      chosen.pop_back();
      chosen.pop_back();
      deg[static_cast<std::size_t>(v)] -= 2;
      --deg[static_cast<std::size_t>(x.neighbor)];
      --deg[static_cast<std::size_t>(y.neighbor)];
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<EdgeId>> find_two_factor(const Graph& g, int limit) {
  if (g.vertex_count() > limit)
    throw LimitError("2-factor search limited to " + std::to_string(limit) + " vertices; supply a 2-factor");
  if (g.vertex_count() < 3) return std::nullopt;
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<EdgeId> chosen;
  if (!extend_two_factor(g, 0, deg, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace wchoose
