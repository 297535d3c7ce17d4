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

// Brute-force reference implementations used only by the tests. They follow
// the definitions directly and share no code with the library algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "wchoose/graph.hpp"
#include "wchoose/integer.hpp"
#include "wchoose/matrix.hpp"
#include "wchoose/oracle.hpp"

namespace oracle {

using wchoose::Edge;
using wchoose::Graph;
using wchoose::Int;
using wchoose::IntMatrix;

// Sum over all permutations, enumerated with next_permutation.
inline Int permanent(const IntMatrix& a) {
  const int n = a.rows();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  Int total = 0;
  do {
    Int prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= a(i, sigma[static_cast<std::size_t>(i)]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -1, int hi = 1) {
  std::uniform_int_distribution<int> pick(lo, hi);
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = pick(rng);
  return m;
}

// All-pairs distances inside the subgraph induced by `mask` (Floyd-Warshall).
inline std::vector<std::vector<int>> distances(const Graph& g, std::uint32_t mask) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges())
    if ((mask >> e.u & 1) && (mask >> e.v & 1)) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    if (mask >> k & 1)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int induced_degree(const Graph& g, std::uint32_t mask, int v) {
  int deg = 0;
  for (const auto& e : g.edges())
    if ((mask >> e.u & 1) && (mask >> e.v & 1) && (e.u == v || e.v == v)) ++deg;
  return deg;
}

// max over induced subgraphs of the least degree sum of a pair at distance t.
inline int t_degeneracy(const Graph& g, int t) {
  const int n = g.vertex_count();
  int best = -1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto d = distances(g, mask);
    int least = -1;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if ((mask >> x & 1) && (mask >> y & 1) && d[x][y] == t) {
          const int s = induced_degree(g, mask, x) + induced_degree(g, mask, y);
          if (least < 0 || s < least) least = s;
        }
    best = std::max(best, least);
  }
  int max_deg = 0;
  for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  return best < 0 ? 2 * max_deg : best;
}

// Least d(u)+d(w) over induced paths u-v-w, or nullopt.
inline std::optional<int> least_2path_sum(const Graph& g) {
  std::optional<int> best;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w)
        if (u != v && w != v && g.adjacent(u, v) && g.adjacent(v, w) && !g.adjacent(u, w)) {
          const int s = g.degree(u) + g.degree(w);
          if (!best || s < *best) best = s;
        }
  return best;
}

using Poly = std::map<std::vector<int>, Int>;

// Product over arcs of (X_head - X_tail), X_v the sum of the variables of the
// edges at v; with `total`, variable m+v is added to X_v.
inline Poly colouring_poly(const wchoose::Digraph& d, bool total) {
  const Graph& g = d.graph();
  const int m = g.edge_count();
  const int vars = m + (total ? g.vertex_count() : 0);
  auto x_of = [&](int v) {
    std::vector<Int> lin(static_cast<std::size_t>(vars), 0);
    for (int e = 0; e < m; ++e)
      if (g.edge(e).u == v || g.edge(e).v == v) lin[static_cast<std::size_t>(e)] += 1;
    if (total) lin[static_cast<std::size_t>(m + v)] += 1;
    return lin;
  };
  Poly p{{std::vector<int>(static_cast<std::size_t>(vars), 0), Int(1)}};
  for (int e = 0; e < m; ++e) {
    const auto head = x_of(d.head(e));
    const auto tail = x_of(d.tail(e));
    Poly next;
    for (const auto& [exps, c] : p)
      for (int j = 0; j < vars; ++j) {
        const Int a = head[static_cast<std::size_t>(j)] - tail[static_cast<std::size_t>(j)];
        if (a == 0) continue;
        auto bumped = exps;
        ++bumped[static_cast<std::size_t>(j)];
        next[bumped] += c * a;
      }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    p = std::move(next);
  }
  return p;
}

inline std::optional<int> mind(const Poly& p) {
  std::optional<int> best;
  for (const auto& [exps, c] : p) {
    const int h = exps.empty() ? 0 : *std::max_element(exps.begin(), exps.end());
    if (!best || h < *best) best = h;
  }
  return best;
}

// Tries every combination of list entries.
inline bool weighting_exists(const Graph& g, const wchoose::ListAssignment& lists) {
  std::vector<const std::vector<wchoose::Rational>*> vars;
  if (lists.vertex_lists)
    for (const auto& l : *lists.vertex_lists) vars.push_back(&l);
  for (const auto& l : lists.edge_lists) vars.push_back(&l);
  std::vector<std::size_t> idx(vars.size(), 0);
  const int n = g.vertex_count();
  while (true) {
    std::vector<wchoose::Rational> sums(static_cast<std::size_t>(n));
    std::size_t i = 0;
    if (lists.vertex_lists)
      for (; i < static_cast<std::size_t>(n); ++i) sums[i] = (*vars[i])[idx[i]];
    for (int e = 0; e < g.edge_count(); ++e, ++i) {
      sums[static_cast<std::size_t>(g.edge(e).u)] += (*vars[i])[idx[i]];
      sums[static_cast<std::size_t>(g.edge(e).v)] += (*vars[i])[idx[i]];
    }
    bool ok = true;
    for (const auto& e : g.edges()) ok = ok && sums[e.u] != sums[e.v];
    if (ok) return true;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == vars[k]->size()) idx[k++] = 0;
    if (k == idx.size()) return false;
  }
}

// Uniform random spanning tree shape via random parent choice.
inline Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  return Graph(n, edges);
}

}  // namespace oracle
