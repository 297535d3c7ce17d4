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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wchoose {

using Vertex = int;
using EdgeId = int;

/// Unordered edge, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  bool contains(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple loopless graph on vertices 0..n-1 with indexed edges.
/// Immutable once constructed.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on loops, parallel edges or out-of-range endpoints.
  explicit Graph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Incidence> incident(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;
  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;
  bool is_complete() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

/// Graph together with the maps from its vertices/edges back to a parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
};

struct Arc {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Orientation of a Graph: one arc per edge, same indexing.
class Digraph {
 public:
  Digraph() = default;
  Digraph(Graph g, std::vector<Arc> arcs);

  const Graph& graph() const { return graph_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(EdgeId e) const { return arcs_.at(static_cast<std::size_t>(e)); }
  Vertex tail(EdgeId e) const { return arc(e).tail; }
  Vertex head(EdgeId e) const { return arc(e).head; }
  Digraph reversed() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  Graph graph_;
  std::vector<Arc> arcs_;
};

// Text formats ---------------------------------------------------------------

/// Parses the edge-list format: optional "n=<count>" header, one "u v" per line,
/// '#' starts a comment.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

/// Parses a multi-graph corpus; every "n=<count>" line starts a new graph.
std::vector<Graph> parse_graph_corpus(std::string_view text);
std::vector<Graph> read_graph_corpus_file(const std::string& path);

// Structure -------------------------------------------------------------------

bool is_nice(const Graph& g);
bool is_connected(const Graph& g);
std::optional<int> common_degree(const Graph& g);  // value when g is regular

/// Connected components, each with maps back into g. Isolated vertices form
/// their own components. Ordered by smallest vertex.
std::vector<Subgraph> components(const Graph& g);

/// Subgraph induced by `vertices` (kept in the given order). Edge order follows g.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

int degeneracy(const Graph& g);
/// Vertices in min-degree peeling order (ties to the smallest id).
std::vector<Vertex> degeneracy_order(const Graph& g);

struct TDegeneracy {
  int value = 0;
  bool exact = true;  // false: value is only an upper bound
};

inline constexpr int kDefaultExhaustiveLimit = 14;

/// Max over induced subgraphs H of the minimum degree sum d_H(x)+d_H(y) over
/// pairs at distance exactly t in H. When no induced subgraph has such a pair
/// the value is 2*max_degree. Above `exhaustive_limit` vertices an upper bound
/// is returned (max_degree + degeneracy for t = 2, 2*max_degree otherwise).
TDegeneracy t_degeneracy(const Graph& g, int t, int exhaustive_limit = kDefaultExhaustiveLimit);

struct DegreeProfile {
  int max_degree = 0;
  int degeneracy = 0;
  std::map<int, TDegeneracy> t_degeneracy;
};

DegreeProfile degree_profile(const Graph& g, std::span<const int> ts = {},
                             int exhaustive_limit = kDefaultExhaustiveLimit);

struct TwoPath {
  Vertex u;
  Vertex v;  // middle vertex
  Vertex w;
  friend bool operator==(const TwoPath&, const TwoPath&) = default;
};

/// Induced path u-v-w minimizing d(u)+d(w); ties go to the lexicographically
/// smallest (u, w, v) with u < w. nullopt when no induced 2-path exists.
std::optional<TwoPath> min_induced_2path(const Graph& g);

// Constructions ---------------------------------------------------------------

/// Adds twin vertices a = n and b = n+1, both joined to every vertex of U
/// (and to each other when `joined`). Edge order: [ab], then (u_i,a), (u_i,b)
/// for U ascending, then the edges of g.
Graph add_twins(const Graph& g, std::span<const Vertex> U, bool joined);

/// Vertex (a, x) gets id a * |V(h)| + x. Edge order: the h-layers (a, H) for a
/// ascending, then the g-fibres in g's edge order.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Edges with exactly one endpoint in S.
std::vector<EdgeId> min_edge_cut_around(const Graph& g, std::span<const Vertex> S);

/// Spanning 2-regular subgraph by backtracking; nullopt if none exists.
/// Throws LimitError above `limit` vertices.
std::optional<std::vector<EdgeId>> find_two_factor(const Graph& g, int limit = 12);
bool is_two_factor(const Graph& g, std::span<const EdgeId> edges);

// Generators ------------------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int leaves);
Graph random_gnm(int n, int m, std::uint64_t seed);
/// Five vertices, edges e0..e5 = 01, 02, 03, 14, 23, 34.
Graph figure1_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

/// kind in {path, cycle, complete, complete_bipartite, star, random_gnm, figure1}.
Graph generate(std::string_view kind, std::span<const long long> params);
/// "kind" or "kind:p1,p2,...", e.g. "cycle:5", "random_gnm:8,12,7".
Graph generate_from_spec(std::string_view spec);

// Orientations ------------------------------------------------------------------

namespace orient_rules {
struct LowToHigh {};
struct DirectedCycle {};
struct Figure1 {};
struct Explicit {
  std::vector<Arc> arcs;
};
/// E_u and uv toward u, E_v toward v, E_w and vw away from w; rest low-to-high.
struct Edgemain {
  Vertex u;
  Vertex v;
  Vertex w;
};
}  // namespace orient_rules

using OrientRule = std::variant<orient_rules::LowToHigh, orient_rules::DirectedCycle, orient_rules::Figure1,
                                orient_rules::Explicit, orient_rules::Edgemain>;

Digraph orient(const Graph& g, const OrientRule& rule);
/// "low_to_high", "directed_cycle", "figure1", "edgemain:u,v,w", "explicit:t-h,t-h,...".
OrientRule parse_orient_rule(std::string_view text);

}  // namespace wchoose
