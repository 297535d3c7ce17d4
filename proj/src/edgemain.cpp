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
#include <stdexcept>

#include "draft.hpp"
#include "wchoose/certify.hpp"
#include "wchoose/error.hpp"

namespace wchoose {

namespace {

BoundReport connected_report(const Graph& g);

// Componentwise; isolated vertices contribute nothing.
BoundReport nice_report(const Graph& g) {
  detail::Draft draft(orient(g, orient_rules::LowToHigh{}));
  int bound = 0;
  for (const auto& comp : components(g)) {
    if (comp.graph.edge_count() == 0) continue;
    if (comp.graph.vertex_count() == 2) throw InputError("graph is not nice: it has a K2 component");
    const BoundReport sub = connected_report(comp.graph);
    draft.place(sub, comp.vertex_map);
    bound = std::max(bound, sub.bound);
  }
  return draft.finish(bound);
}

std::set<Vertex> neighbours(const Graph& g, Vertex x) {
  std::set<Vertex> out;
  for (const auto& inc : g.incident(x)) out.insert(inc.neighbor);
  return out;
}

// p and q are twins over U (adjacent to each other when `joined`). Certifies
// g - {p, q} and grows it back.
BoundReport twin_step(const Graph& g, Vertex p, Vertex q, std::vector<Vertex> U, bool joined) {
  std::set<Vertex> expect(U.begin(), U.end());
  auto np = neighbours(g, p);
  auto nq = neighbours(g, q);
  if (joined != (np.erase(q) == 1) || joined != (nq.erase(p) == 1) || np != expect || nq != expect)
    throw std::logic_error("twin step applied to vertices that are not twins");

  const std::vector<Vertex> removed{p, q};
  const Subgraph rest = remove_vertices(g, removed);
  if (!is_nice(rest.graph)) throw std::logic_error("twin step left a graph that is not nice");
  const BoundReport sub = nice_report(rest.graph);

  const int n = rest.graph.vertex_count();
  std::vector<Vertex> local;
  for (const Vertex x : U) {
    const auto it = std::find(rest.vertex_map.begin(), rest.vertex_map.end(), x);
    local.push_back(static_cast<Vertex>(it - rest.vertex_map.begin()));
  }
  const BoundReport grown = witness_twins(sub, local, joined);
  std::vector<Vertex> map(rest.vertex_map);
  map.resize(static_cast<std::size_t>(n) + 2);
  map[static_cast<std::size_t>(n)] = p;
  map[static_cast<std::size_t>(n) + 1] = q;
  return relabel(grown, g, map);
}

BoundReport case_one(const Graph& g, const TwoPath& path, Vertex x) {
  const auto [u, v, w] = path;
  if (neighbours(g, v) != std::set<Vertex>{u, w, x}) throw std::logic_error("middle vertex has unexpected neighbours");
  const bool xu = g.adjacent(x, u);
  const bool xw = g.adjacent(x, w);
  if (xu && xw) return twin_step(g, v, x, {std::min(u, w), std::max(u, w)}, true);
  if (xu) return twin_step(g, u, x, {v}, true);
  if (xw) return twin_step(g, w, x, {v}, true);
  return twin_step(g, u, x, {v}, false);
}

BoundReport case_two(const Graph& g, const TwoPath& path, const std::vector<EdgeId>& family) {
  const auto [u, v, w] = path;
  const EdgeId uv = *g.edge_between(u, v);
  const EdgeId vw = *g.edge_between(v, w);
  detail::Draft draft(orient(g, orient_rules::Edgemain{u, v, w}));

  std::vector<Vertex> removed{u, w};
  for (const EdgeId f : family) {
    removed.push_back(g.edge(f).u);
    removed.push_back(g.edge(f).v);
  }
  const Subgraph h = remove_vertices(g, removed);
  const BoundReport sub = nice_report(h.graph);

  const int sum = g.degree(u) + g.degree(w);
  draft.add_column({Term{uv, 1}, Term{vw, -1}}, sum);
  for (const EdgeId f : family) {
    // smallest edge at u or w that meets f; f points away from the shared end
    EdgeId chosen = -1;
    Vertex shared = -1;
    for (const Vertex end : {g.edge(f).u, g.edge(f).v})
      for (const auto& inc : g.incident(end))
        if ((inc.neighbor == u || inc.neighbor == w) && (chosen < 0 || inc.edge < chosen)) {
          chosen = inc.edge;
          shared = end;
        }
    if (chosen < 0) throw std::logic_error("K2 component not attached to u or w");
    draft.set_arc(f, shared, g.edge(f).other(shared));
    draft.add_column({Term{chosen, 1}});
  }
  draft.place(sub, h.vertex_map);
  for (const auto& inc : g.incident(v))
    if (inc.neighbor != u && inc.neighbor != w) draft.set_arc(inc.edge, inc.neighbor, v);

  int bound = std::max(sum, sub.bound);
  if (!family.empty()) bound = std::max(bound, 1);
  return draft.finish(bound);
}

BoundReport connected_report(const Graph& g) {
  const int n = g.vertex_count();
  if (g.is_complete()) {
    std::vector<Vertex> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    return relabel(witness_complete(n), g, identity);
  }
  if (n <= 4) return witness_search(orient(g, orient_rules::LowToHigh{}));

  const TwoPath path = *min_induced_2path(g);
  const std::vector<Vertex> ends{path.u, path.w};
  const Subgraph rest = remove_vertices(g, ends);
  std::vector<EdgeId> family;
  for (const auto& comp : components(rest.graph)) {
    if (comp.graph.vertex_count() != 2 || comp.graph.edge_count() != 1) continue;
    const Vertex a = rest.vertex_map[static_cast<std::size_t>(comp.vertex_map[0])];
    const Vertex b = rest.vertex_map[static_cast<std::size_t>(comp.vertex_map[1])];
    family.push_back(*g.edge_between(a, b));
  }
  std::sort(family.begin(), family.end());
  for (const EdgeId f : family)
    if (g.edge(f).contains(path.v)) return case_one(g, path, g.edge(f).other(path.v));
  return case_two(g, path, family);
}

}  // namespace

BoundReport witness_edgemain(const Graph& g) {
  if (g.vertex_count() < 3) throw InputError("graph needs at least 3 vertices");
  if (!is_nice(g)) throw InputError("graph is not nice: it has a K2 component");
  return nice_report(g);
}

}  // namespace wchoose
