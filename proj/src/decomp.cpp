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
#include <set>

#include "draft.hpp"
#include "wchoose/certify.hpp"
#include "wchoose/error.hpp"

namespace wchoose {

namespace {

// Walks each cycle of the 2-factor and points its edges along the walk.
void direct_cycles(detail::Draft& draft, const std::vector<EdgeId>& factor) {
  const Graph& g = draft.graph();
  std::vector<std::vector<EdgeId>> at(static_cast<std::size_t>(g.vertex_count()));
  for (const EdgeId e : factor) {
    at[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    at[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  }
  std::set<EdgeId> done;
  for (const EdgeId start : factor) {
    if (done.count(start)) continue;
    Vertex cur = g.edge(start).u;
    EdgeId e = start;
    while (!done.count(e)) {
      done.insert(e);
      const Vertex next = g.edge(e).other(cur);
      draft.set_arc(e, cur, next);
      const auto& pair = at[static_cast<std::size_t>(next)];
      e = pair[0] == e ? pair[1] : pair[0];
      cur = next;
    }
  }
}

// Same vertex count and edge set; the edge order may differ.
bool same_graph(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (const auto& e : a.edges())
    if (!b.adjacent(e.u, e.v)) return false;
  return true;
}

}  // namespace

BoundReport witness_decomp(const Graph& g, std::span<const Vertex> h_vertices, const BoundReport& h_report,
                           std::span<const PlacedReport> rest, std::optional<std::vector<EdgeId>> two_factor) {
  if (h_vertices.empty()) throw InputError("the decomposed part needs at least one vertex");
  const Subgraph hsub = induced_subgraph(g, h_vertices);
  if (!same_graph(h_report.graph, hsub.graph)) throw InputError("report does not describe the induced subgraph");
  if (!verify(h_report.certificate)) throw InputError("report for the decomposed part does not verify");
  for (const auto& p : rest)
    if (!verify(p.report.certificate)) throw InputError("report for the remainder does not verify");

  std::vector<EdgeId> factor;
  if (two_factor) {
    std::vector<EdgeId> local;
    for (const EdgeId e : *two_factor) {
      const auto it = std::find(hsub.edge_map.begin(), hsub.edge_map.end(), e);
      if (it == hsub.edge_map.end()) throw InputError("2-factor edge outside the decomposed part");
      local.push_back(static_cast<EdgeId>(it - hsub.edge_map.begin()));
    }
    if (!is_two_factor(hsub.graph, local)) throw InputError("supplied edges are not a 2-factor");
    factor = *two_factor;
  } else {
    const auto found = find_two_factor(hsub.graph);
    if (!found) throw InputError("the decomposed part has no 2-factor");
    for (const EdgeId e : *found) factor.push_back(hsub.edge_map[static_cast<std::size_t>(e)]);
  }

  const auto cut = min_edge_cut_around(g, h_vertices);
  std::set<Vertex> inside(h_vertices.begin(), h_vertices.end());
  detail::Draft draft(orient(g, orient_rules::LowToHigh{}));
  for (const EdgeId x : cut) {
    const Edge& e = g.edge(x);
    const Vertex tail = inside.count(e.u) ? e.u : e.v;
    draft.set_arc(x, tail, e.other(tail));
  }

  const int cut_size = static_cast<int>(cut.size());
  Combination c;
  for (const EdgeId e : factor) c.push_back(Term{e, 1});
  draft.add_column(c, cut_size);
  draft.place(h_report, hsub.vertex_map);
  direct_cycles(draft, factor);
  int bound = cut_size + h_report.bound;
  int placed_edges = hsub.graph.edge_count();
  for (const auto& p : rest) {
    draft.place(p.report, p.vertex_map);
    bound = std::max(bound, p.report.bound);
    placed_edges += p.report.graph.edge_count();
  }
  if (placed_edges + cut_size != g.edge_count()) throw InputError("remainder reports do not cover the rest of the graph");
  return draft.finish(bound);
}

BoundReport witness_product(const Graph& g, const Graph& h, const BoundReport& h_report) {
  const int nh = h.vertex_count();
  if (g.vertex_count() < 1) throw InputError("product needs a nonempty first factor");
  if (nh < 3 || !common_degree(h)) throw InputError("second factor must be regular on at least 3 vertices");
  const auto factor = find_two_factor(h);
  if (!factor) throw InputError("second factor has no 2-factor");
  if (!same_graph(h_report.graph, h)) throw InputError("report does not describe the second factor");

  const Graph product = cartesian_product(g, h);
  auto layer = [nh](Vertex a) {
    std::vector<Vertex> out(static_cast<std::size_t>(nh));
    std::iota(out.begin(), out.end(), a * nh);
    return out;
  };

  // Peel g in degeneracy order; build from the last vertex back to the first.
  const auto order = degeneracy_order(g);
  std::vector<Vertex> kept = layer(order.back());
  BoundReport current = h_report;
  for (int i = static_cast<int>(order.size()) - 2; i >= 0; --i) {
    std::vector<Vertex> grown = layer(order[static_cast<std::size_t>(i)]);
    grown.insert(grown.end(), kept.begin(), kept.end());
    const Subgraph part = induced_subgraph(product, grown);

    std::vector<Vertex> local_layer(static_cast<std::size_t>(nh));
    std::iota(local_layer.begin(), local_layer.end(), 0);
    std::vector<EdgeId> local_factor;
    for (const EdgeId e : *factor) local_factor.push_back(*part.graph.edge_between(h.edge(e).u, h.edge(e).v));
    std::vector<Vertex> shift(kept.size());
    std::iota(shift.begin(), shift.end(), nh);
    const PlacedReport rest{current, shift};

    current = witness_decomp(part.graph, local_layer, h_report, std::span(&rest, 1), local_factor);
    kept = std::move(grown);
  }
  return relabel(current, product, kept);
}

}  // namespace wchoose
