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

#include <algorithm>
#include <charconv>
#include <random>
#include <string>

#include "wchoose/error.hpp"
#include "wchoose/graph.hpp"

namespace wchoose {

Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete bipartite graph needs both sides >= 1");
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = 0; y < b; ++y) edges.push_back({x, a + y});
  return Graph(a + b, std::move(edges));
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw InputError("star needs at least one leaf");
  return complete_bipartite_graph(1, leaves);
}

Graph random_gnm(int n, int m, std::uint64_t seed) {
  if (n < 0) throw InputError("random_gnm needs n >= 0");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_edges) throw InputError("random_gnm: m out of range");
  std::vector<Edge> all;
  all.reserve(static_cast<std::size_t>(max_edges));
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) all.push_back({a, b});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), all.size() - 1);
    std::swap(all[static_cast<std::size_t>(i)], all[pick(rng)]);
  }
  all.resize(static_cast<std::size_t>(m));
  std::sort(all.begin(), all.end(), [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  return Graph(n, std::move(all));
}

Graph figure1_graph() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 3}, {3, 4}}); }

Graph generate(std::string_view kind, std::span<const long long> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError("generator '" + std::string(kind) + "' takes " + std::to_string(count) + " parameter(s)");
  };
  auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
  if (kind == "path") {
    need(1);
    return path_graph(p(0));
  }
  if (kind == "cycle") {
    need(1);
    return cycle_graph(p(0));
  }
  if (kind == "complete") {
    need(1);
    return complete_graph(p(0));
  }
  if (kind == "complete_bipartite") {
    need(2);
    return complete_bipartite_graph(p(0), p(1));
  }
  if (kind == "star") {
    need(1);
    return star_graph(p(0));
  }
  if (kind == "random_gnm") {
    need(3);
    return random_gnm(p(0), p(1), static_cast<std::uint64_t>(params[2]));
  }
  if (kind == "figure1") {
    need(0);
    return figure1_graph();
  }
  throw InputError("unknown graph family '" + std::string(kind) + "'");
}

Graph generate_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  std::vector<long long> params;
  if (colon != std::string_view::npos) {
    auto rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto tok = rest.substr(0, comma);
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("bad generator parameter '" + std::string(tok) + "'");
      params.push_back(value);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  return generate(kind, params);
}

namespace {

Arc toward(const Edge& e, Vertex head) { return {e.other(head), head}; }

std::vector<Arc> directed_cycle_arcs(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g) || common_degree(g) != 2)
    throw InputError("directed_cycle orientation needs a cycle graph");
  std::vector<Arc> arcs(static_cast<std::size_t>(g.edge_count()));
  Vertex prev = -1;
  Vertex cur = 0;
  for (int step = 0; step < g.vertex_count(); ++step) {
    const auto inc = g.incident(cur);
    // leave vertex 0 through its smaller neighbour, then keep walking
    Incidence next = inc[0];
    if (prev < 0) {
      next = inc[0].neighbor < inc[1].neighbor ? inc[0] : inc[1];
    } else {
      next = inc[0].neighbor == prev ? inc[1] : inc[0];
    }
    arcs[static_cast<std::size_t>(next.edge)] = {cur, next.neighbor};
    prev = cur;
    cur = next.neighbor;
  }
  return arcs;
}

std::vector<Arc> edgemain_arcs(const Graph& g, const orient_rules::Edgemain& r) {
  const auto uv = g.edge_between(r.u, r.v);
  const auto vw = g.edge_between(r.v, r.w);
  if (!uv || !vw || g.adjacent(r.u, r.w) || r.u == r.w)
    throw InputError("edgemain orientation needs an induced 2-path u-v-w");
  std::vector<Arc> arcs(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    Arc a{ed.u, ed.v};
    if (ed.contains(r.u)) {
      a = toward(ed, r.u);
    } else if (ed.contains(r.w)) {
      a = {r.w, ed.other(r.w)};
    } else if (ed.contains(r.v)) {
      a = toward(ed, r.v);
    }
    arcs[static_cast<std::size_t>(e)] = a;
  }
  return arcs;
}

}  // namespace

Digraph orient(const Graph& g, const OrientRule& rule) {
  return std::visit(
      [&](const auto& r) -> Digraph {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, orient_rules::LowToHigh>) {
          std::vector<Arc> arcs;
          for (const auto& e : g.edges()) arcs.push_back({e.u, e.v});
          return Digraph(g, std::move(arcs));
        } else if constexpr (std::is_same_v<R, orient_rules::DirectedCycle>) {
          return Digraph(g, directed_cycle_arcs(g));
        } else if constexpr (std::is_same_v<R, orient_rules::Figure1>) {
          if (!(g == figure1_graph())) throw InputError("figure1 orientation applies only to the figure1 graph");
          return Digraph(g, {{0, 1}, {0, 2}, {3, 0}, {4, 1}, {2, 3}, {3, 4}});
        } else if constexpr (std::is_same_v<R, orient_rules::Explicit>) {
          return Digraph(g, r.arcs);
        } else {
          return Digraph(g, edgemain_arcs(g, r));
        }
      },
      rule);
}

OrientRule parse_orient_rule(std::string_view text) {
  auto ints = [](std::string_view s, char sep) {
    std::vector<int> out;
    while (!s.empty()) {
      const auto pos = s.find(sep);
      const auto tok = s.substr(0, pos);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("bad integer '" + std::string(tok) + "' in orientation rule");
      out.push_back(value);
      s = pos == std::string_view::npos ? std::string_view{} : s.substr(pos + 1);
    }
    return out;
  };
  if (text == "low_to_high") return orient_rules::LowToHigh{};
  if (text == "directed_cycle") return orient_rules::DirectedCycle{};
  if (text == "figure1") return orient_rules::Figure1{};
  if (text.starts_with("edgemain:")) {
    const auto v = ints(text.substr(9), ',');
    if (v.size() != 3) throw InputError("edgemain rule needs u,v,w");
    return orient_rules::Edgemain{v[0], v[1], v[2]};
  }
  if (text.starts_with("explicit:")) {
    orient_rules::Explicit r;
    auto rest = text.substr(9);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto tok = rest.substr(0, comma);
      const auto v = ints(tok, '-');
      if (v.size() != 2) throw InputError("explicit arcs are written tail-head");
      r.arcs.push_back({v[0], v[1]});
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return r;
  }
  throw InputError("unknown orientation rule '" + std::string(text) + "'");
}

}  // namespace wchoose
