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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wchoose/graph.hpp"
#include "wchoose/incidence.hpp"
#include "wchoose/permanent.hpp"

using namespace wchoose;

namespace {

Digraph random_digraph(std::mt19937_64& rng, int n) {
  const int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
  const Graph g = random_gnm(n, m, rng());
  std::vector<Arc> arcs;
  std::bernoulli_distribution flip(0.5);
  for (const auto& e : g.edges()) arcs.push_back(flip(rng) ? Arc{e.v, e.u} : Arc{e.u, e.v});
  return Digraph(g, arcs);
}

}  // namespace

TEST_CASE("figure fixture matrices") {
  const auto bundle = build_bundle(orient(figure1_graph(), orient_rules::Figure1{}));
  const IntMatrix expected = IntMatrix::from_rows({{0, -1, -1, 1, 0, 0, -1, 1, 0, 0, 0},
                                                   {-1, 0, -1, 0, 1, 0, -1, 0, 1, 0, 0},
                                                   {1, 1, 0, 0, -1, -1, 1, 0, 0, -1, 0},
                                                   {1, 0, 0, 0, 0, -1, 0, 1, 0, 0, -1},
                                                   {0, -1, 1, 0, 0, 1, 0, 0, -1, 1, 0},
                                                   {0, 0, -1, 1, -1, 0, 0, 0, 0, -1, 1}});
  CHECK(bundle.m_mat == expected);
  CHECK(bundle.a.rows() == 6);
  CHECK(bundle.b.cols() == 5);
  CHECK(per_square(bundle.a) == -4);
}

TEST_CASE("single arc and directed triangle") {
  const auto k2 = build_bundle(Digraph(complete_graph(2), {{0, 1}}));
  CHECK(k2.a == IntMatrix::from_rows({{0}}));
  CHECK(k2.b == IntMatrix::from_rows({{-1, 1}}));

  const auto c3 = build_bundle(orient(cycle_graph(3), orient_rules::DirectedCycle{}));
  for (int i = 0; i < 3; ++i) {
    CHECK(c3.a(i, i) == 0);
    int sum = 0;
    for (int j = 0; j < 3; ++j) sum += static_cast<int>(c3.a(i, j));
    CHECK(sum == 0);
  }
  CHECK(per_square(c3.a) == oracle::permanent(c3.a));
}

TEST_CASE("incidence invariants") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = random_digraph(rng, std::uniform_int_distribution<int>(2, 8)(rng));
    const Graph& g = d.graph();
    const auto bundle = build_bundle(d);
    const int m = g.edge_count();
    CHECK(bundle.m_mat == hconcat(bundle.a, bundle.b));
    CHECK(edge_matrix(d) == bundle.a);
    for (int i = 0; i < m; ++i) {
      CHECK(bundle.a(i, i) == 0);
      // every row of B sums to zero with one +1 at the head
      Int row = 0;
      for (int v = 0; v < g.vertex_count(); ++v) row += bundle.b(i, v);
      CHECK(row == 0);
      CHECK(bundle.b(i, d.head(i)) == 1);
      CHECK(bundle.b(i, d.tail(i)) == -1);
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        const Edge& f = g.edge(j);
        const long long expect = (f.contains(d.head(i)) ? 1 : 0) - (f.contains(d.tail(i)) ? 1 : 0);
        CHECK(bundle.a(i, j) == expect);
      }
    }
  }
}

TEST_CASE("reversing the orientation negates every row") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph d = random_digraph(rng, std::uniform_int_distribution<int>(2, 6)(rng));
    const int m = d.graph().edge_count();
    if (m > 9) continue;
    const auto fwd = build_bundle(d);
    const auto rev = build_bundle(d.reversed());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < fwd.m_mat.cols(); ++j) CHECK(rev.m_mat(i, j) == -fwd.m_mat(i, j));
    const Int sign = (m % 2 == 0) ? 1 : -1;
    CHECK(per_square(rev.a) == sign * per_square(fwd.a));
  }
}

TEST_CASE("rows match the linear factors") {
  // row i of A_D holds the coefficients of X_head(e_i) - X_tail(e_i) in the edge variables
  const Digraph d = orient(figure1_graph(), orient_rules::Figure1{});
  const auto bundle = build_bundle(d);
  const auto p = oracle::colouring_poly(d, false);
  // the all-ones coefficient equals per A_D since the product has degree m
  CHECK(p.at(std::vector<int>(6, 1)) == per_square(bundle.a));
}
