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
#include <bit>
#include <cstdint>
#include <limits>
#include <tuple>

#include "wchoose/error.hpp"
#include "wchoose/graph.hpp"

namespace wchoose {

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[static_cast<std::size_t>(v)] &&
          (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
        best = v;
    removed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    for (const auto& inc : g.incident(best))
      if (!removed[static_cast<std::size_t>(inc.neighbor)]) --deg[static_cast<std::size_t>(inc.neighbor)];
  }
  return order;
}

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  int result = 0;
  for (const Vertex v : degeneracy_order(g)) {
    result = std::max(result, deg[static_cast<std::size_t>(v)]);
    removed[static_cast<std::size_t>(v)] = true;
    for (const auto& inc : g.incident(v))
      if (!removed[static_cast<std::size_t>(inc.neighbor)]) --deg[static_cast<std::size_t>(inc.neighbor)];
  }
  return result;
}

namespace {

using Mask = std::uint32_t;

// Minimum degree sum over pairs at distance exactly t inside the subgraph
// induced by `sub`; -1 when no such pair exists.
int delta_t(const std::vector<Mask>& nbr, Mask sub, int t) {
  int best = std::numeric_limits<int>::max();
  Mask rest = sub;
  while (rest) {
    const int s = std::countr_zero(rest);
    rest &= rest - 1;
    Mask seen = Mask{1} << s;
    Mask frontier = seen;
    for (int step = 0; step < t && frontier; ++step) {
      Mask next = 0;
      Mask f = frontier;
      while (f) {
        const int x = std::countr_zero(f);
        f &= f - 1;
        next |= nbr[static_cast<std::size_t>(x)] & sub;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    // frontier now holds the vertices at distance exactly t from s.
    Mask targets = frontier & ~((Mask{2} << s) - 1);  // each pair once
    if (!targets) continue;
    const int ds = std::popcount(nbr[static_cast<std::size_t>(s)] & sub);
    while (targets) {
      const int y = std::countr_zero(targets);
      targets &= targets - 1;
      best = std::min(best, ds + std::popcount(nbr[static_cast<std::size_t>(y)] & sub));
    }
  }
  return best == std::numeric_limits<int>::max() ? -1 : best;
}

}  // namespace

TDegeneracy t_degeneracy(const Graph& g, int t, int exhaustive_limit) {
  if (t < 1) throw InputError("t_degeneracy requires t >= 1");
  const int n = g.vertex_count();
  const int delta = g.max_degree();
  if (n > exhaustive_limit || n > 30) {
    if (t == 2) return {delta + degeneracy(g), false};
    return {2 * delta, false};
  }
  std::vector<Mask> nbr(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    nbr[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    nbr[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  int best = -1;
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask sub = 1; sub <= full && sub != 0; ++sub) {
    if (std::popcount(sub) < t + 1) continue;  // distance t needs t+1 vertices
    int max_deg_sub = 0;
    for (Mask r = sub; r; r &= r - 1)
      max_deg_sub = std::max(max_deg_sub, std::popcount(nbr[static_cast<std::size_t>(std::countr_zero(r))] & sub));
    if (2 * max_deg_sub <= best) continue;  // cannot improve
    best = std::max(best, delta_t(nbr, sub, t));
  }
  if (best < 0) return {2 * delta, true};
  return {best, true};
}

DegreeProfile degree_profile(const Graph& g, std::span<const int> ts, int exhaustive_limit) {
  DegreeProfile p;
  p.max_degree = g.max_degree();
  p.degeneracy = degeneracy(g);
  for (const int t : ts) p.t_degeneracy[t] = t_degeneracy(g, t, exhaustive_limit);
  return p;
}

std::optional<TwoPath> min_induced_2path(const Graph& g) {
  std::optional<TwoPath> best;
  int best_sum = std::numeric_limits<int>::max();
  auto key = [](const TwoPath& p) { return std::tuple(p.u, p.w, p.v); };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = 0; j < inc.size(); ++j) {
        const Vertex u = inc[i].neighbor;
        const Vertex w = inc[j].neighbor;
        if (u >= w || g.adjacent(u, w)) continue;
        const TwoPath cand{u, v, w};
        const int sum = g.degree(u) + g.degree(w);
        if (sum < best_sum || (sum == best_sum && key(cand) < key(*best))) {
          best_sum = sum;
          best = cand;
        }
      }
    }
  }
  return best;
}

}  // namespace wchoose
