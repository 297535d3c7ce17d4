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
#include <numeric>

#include "wchoose/certify.hpp"
#include "wchoose/error.hpp"

namespace wchoose {

BoundReport witness_cycle(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  const Graph g = cycle_graph(n);
  return witness_search_capped(orient(g, orient_rules::DirectedCycle{}), 2);
}

// Twin edges point from the twins toward U, the ab edge from b to a. Each pair
// (a u_i, b u_i) contributes the difference of its two columns twice; in the
// joined case the ab column is taken twice and the first difference once.
BoundReport witness_twins(const BoundReport& g_report, std::span<const Vertex> U, bool joined) {
  const Certificate& sub = g_report.certificate;
  if (sub.matrix != MatrixKind::A) throw InputError("twin construction needs an edge-matrix certificate");
  if (!verify(sub)) throw InputError("input report does not verify");
  const Graph& g = g_report.graph;
  const Graph f = add_twins(g, U, joined);
  const int n = g.vertex_count();
  const Vertex a = n;
  const Vertex b = n + 1;
  std::vector<Vertex> sorted(U.begin(), U.end());
  std::sort(sorted.begin(), sorted.end());
  const int k = static_cast<int>(sorted.size());
  const int offset = joined ? 1 : 0;
  const int shift = offset + 2 * k;

  std::vector<Arc> arcs;
  if (joined) arcs.push_back({b, a});
  for (const Vertex x : sorted) {
    arcs.push_back({a, x});
    arcs.push_back({b, x});
  }
  for (const auto& arc : sub.digraph.arcs()) arcs.push_back(arc);

  Certificate cert;
  cert.digraph = Digraph(f, std::move(arcs));
  cert.matrix = MatrixKind::A;
  cert.claimed_bound = std::max(2, g_report.bound);
  if (joined) {
    cert.columns.push_back({Term{0, 1}});
    cert.columns.push_back({Term{0, 1}});
  }
  for (int i = 0; i < k; ++i) {
    const Combination diff{Term{offset + 2 * i, 1}, Term{offset + 2 * i + 1, -1}};
    cert.columns.push_back(diff);
    if (!(joined && i == 0)) cert.columns.push_back(diff);
  }
  for (const auto& combo : sub.columns) {
    Combination c;
    for (const auto& t : combo) c.push_back(Term{t.column + shift, t.coeff});
    cert.columns.push_back(std::move(c));
  }
  return make_report(std::move(cert));
}

BoundReport witness_complete(int n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  if (n == 1) return witness_edgeless(1);
  if (n == 2) throw InputError("K2 has infinite monomial index");
  if (n == 4) return witness_search_capped(orient(complete_graph(4), orient_rules::LowToHigh{}), 2);
  const BoundReport base = n == 3 ? witness_edgeless(1) : witness_complete(n - 2);
  std::vector<Vertex> all(static_cast<std::size_t>(n - 2));
  std::iota(all.begin(), all.end(), 0);
  const BoundReport grown = witness_twins(base, all, true);
  std::vector<Vertex> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  return relabel(grown, complete_graph(n), identity);
}

BoundReport witness_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InputError("both sides of a complete bipartite graph must be nonempty");
  if (a == 1 && b == 1) throw InputError("K2 has infinite monomial index");
  // The twins always land on the side called `grow`; the other side is `fixed`.
  int fixed = 0;
  int grow = 0;
  bool fixed_is_a = true;
  BoundReport report;
  if (b % 2 == 0 || a % 2 == 0) {
    fixed_is_a = b % 2 == 0;
    fixed = fixed_is_a ? a : b;
    grow = fixed_is_a ? b : a;
    report = witness_edgeless(fixed);
  } else {
    fixed_is_a = a >= b;
    fixed = std::max(a, b);
    grow = std::min(a, b);
    std::vector<Edge> spokes;
    for (Vertex x = 0; x < fixed; ++x) spokes.push_back({x, fixed});
    report = witness_search_capped(orient(Graph(fixed + 1, spokes), orient_rules::LowToHigh{}), 2);
    --grow;
  }
  std::vector<Vertex> side(static_cast<std::size_t>(fixed));
  std::iota(side.begin(), side.end(), 0);
  for (int pairs = grow / 2; pairs > 0; --pairs) report = witness_twins(report, side, false);

  // Built graph: fixed side is 0..fixed-1, the growing side follows.
  const int total = a + b;
  std::vector<Vertex> map(static_cast<std::size_t>(total));
  for (Vertex x = 0; x < total; ++x) {
    const bool on_fixed = x < fixed;
    const int pos = on_fixed ? x : x - fixed;
    const bool on_a = on_fixed == fixed_is_a;
    map[static_cast<std::size_t>(x)] = on_a ? pos : a + pos;
  }
  return relabel(report, complete_bipartite_graph(a, b), map);
}

BoundReport witness_tree(const Graph& tree) {
  if (tree.vertex_count() < 3 || tree.edge_count() != tree.vertex_count() - 1 || !is_connected(tree))
    throw InputError("expected a tree on at least 3 vertices");
  return witness_search_capped(orient(tree, orient_rules::LowToHigh{}), 2);
}

}  // namespace wchoose
