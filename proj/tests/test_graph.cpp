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

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wchoose/error.hpp"
#include "wchoose/graph.hpp"

using namespace wchoose;

namespace {

std::vector<Graph> corpus_up_to(int max_n) {
  std::vector<Graph> out;
  for (auto& g : read_graph_corpus_file(WCHOOSE_FIXTURES "/connected_le7.graphs"))
    if (g.vertex_count() <= max_n) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("parse edge lists") {
  const Graph p3 = parse_edge_list("0 1\n1 2");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);

  CHECK_THROWS_AS(parse_edge_list("0 0"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2"), InputError);
  CHECK_THROWS_AS(parse_edge_list("0 x"), InputError);
  CHECK_THROWS_AS(parse_edge_list("n=2\n0 5"), InputError);

  const Graph padded = parse_edge_list("# comment\nn=7\n0 1   # trailing\n\n2 3\n");
  CHECK(padded.vertex_count() == 7);
  CHECK(padded.edge_count() == 2);

  const Graph fig = read_edge_list_file(WCHOOSE_FIXTURES "/figure1.edges");
  CHECK(fig.vertex_count() == 5);
  CHECK(fig.edge_count() == 6);
  CHECK(fig == figure1_graph());
  CHECK(parse_edge_list(format_edge_list(fig)) == fig);
}

TEST_CASE("graph constructor rejects bad edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Digraph(path_graph(3), {{0, 2}, {1, 2}}), InputError);
}

TEST_CASE("corpus holds every connected graph up to 7 vertices") {
  const auto corpus = read_graph_corpus_file(WCHOOSE_FIXTURES "/connected_le7.graphs");
  std::map<int, int> per_size;
  for (const auto& g : corpus) {
    CHECK(is_connected(g));
    ++per_size[g.vertex_count()];
  }
  // counts of connected unlabelled graphs on 1..7 vertices
  CHECK(per_size == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}, {7, 853}});
}

TEST_CASE("niceness") {
  CHECK_FALSE(is_nice(complete_graph(2)));
  CHECK(is_nice(path_graph(3)));
  CHECK_FALSE(is_nice(disjoint_union(path_graph(3), complete_graph(2))));
  CHECK(is_nice(Graph(4)));
}

TEST_CASE("components") {
  const Graph g = disjoint_union(path_graph(3), complete_graph(2));
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].graph.vertex_count() == 3);
  CHECK(comps[1].graph.edge_count() == 1);
  CHECK(comps[1].vertex_map == std::vector<Vertex>{3, 4});

  const Graph c5 = cycle_graph(5);
  const auto one = components(c5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].graph == c5);

  CHECK(components(Graph(0)).empty());
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(path_graph(6)) == 1);
  CHECK(degeneracy(star_graph(5)) == 1);
  CHECK(degeneracy(complete_graph(5)) == 4);
  CHECK(degeneracy(cycle_graph(6)) == 2);
  CHECK(degeneracy(Graph(3)) == 0);
  for (const auto& g : corpus_up_to(6)) CHECK(degeneracy(g) <= g.max_degree());
}

TEST_CASE("t-degeneracy on named graphs") {
  for (int n = 3; n <= 6; ++n) CHECK(t_degeneracy(complete_graph(n), 2).value == 2 * (n - 1));
  CHECK(t_degeneracy(path_graph(3), 2).value == oracle::t_degeneracy(path_graph(3), 2));
  CHECK(t_degeneracy(path_graph(3), 2).value == 2);
  CHECK(t_degeneracy(cycle_graph(5), 2).value == oracle::t_degeneracy(cycle_graph(5), 2));
  CHECK(t_degeneracy(cycle_graph(5), 2).value == 4);
  CHECK(t_degeneracy(path_graph(3), 2).exact);
}

TEST_CASE("t-degeneracy agrees with subset enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
    const Graph g = random_gnm(n, m, rng());
    for (int t = 1; t <= 3; ++t) CHECK(t_degeneracy(g, t).value == oracle::t_degeneracy(g, t));
  }
}

TEST_CASE("t-degeneracy falls back to an upper bound above the limit") {
  const Graph g = random_gnm(16, 30, 5);
  const auto exact = t_degeneracy(g, 2, 16);
  const auto bound = t_degeneracy(g, 2);
  CHECK(exact.exact);
  CHECK_FALSE(bound.exact);
  CHECK(bound.value == g.max_degree() + degeneracy(g));
  CHECK(exact.value <= bound.value);
  CHECK(t_degeneracy(g, 3).value == 2 * g.max_degree());
}

TEST_CASE("no pair at distance t gives twice the max degree") {
  CHECK(t_degeneracy(complete_graph(5), 3).value == 8);
  CHECK(t_degeneracy(path_graph(4), 4).value == 4);
}

TEST_CASE("distance-2 degeneracy is at most max degree plus degeneracy") {
  for (const auto& g : corpus_up_to(7)) CHECK(t_degeneracy(g, 2).value <= g.max_degree() + degeneracy(g));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
    const Graph g = random_gnm(n, m, rng());
    CHECK(t_degeneracy(g, 2).value <= g.max_degree() + degeneracy(g));
  }
}

TEST_CASE("degree profile") {
  const std::vector<int> ts{1, 2};
  const auto p = degree_profile(figure1_graph(), ts);
  CHECK(p.max_degree == 3);
  CHECK(p.degeneracy == 2);
  CHECK(p.t_degeneracy.at(2).value == oracle::t_degeneracy(figure1_graph(), 2));
  CHECK(p.t_degeneracy.at(1).value == oracle::t_degeneracy(figure1_graph(), 1));
}

TEST_CASE("induced 2-paths") {
  const auto p = min_induced_2path(path_graph(3));
  REQUIRE(p);
  CHECK(*p == TwoPath{0, 1, 2});
  CHECK_FALSE(min_induced_2path(complete_graph(4)));

  const Graph chorded(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  const auto q = min_induced_2path(chorded);
  REQUIRE(q);
  CHECK(q->u == 1);
  CHECK(q->w == 3);
  CHECK(chorded.degree(q->u) + chorded.degree(q->w) == 4);
}

TEST_CASE("induced 2-path minimizes the end degree sum") {
  for (const auto& g : corpus_up_to(7)) {
    const auto p = min_induced_2path(g);
    const auto best = oracle::least_2path_sum(g);
    REQUIRE(p.has_value() == best.has_value());
    if (!p) continue;
    CHECK(g.adjacent(p->u, p->v));
    CHECK(g.adjacent(p->v, p->w));
    CHECK_FALSE(g.adjacent(p->u, p->w));
    CHECK(p->u < p->w);
    CHECK(g.degree(p->u) + g.degree(p->w) == *best);
  }
}

TEST_CASE("twin construction") {
  const std::vector<Vertex> zero{0};
  const Graph k3 = add_twins(Graph(1), zero, true);
  CHECK(k3.is_complete());
  CHECK(k3.vertex_count() == 3);

  const std::vector<Vertex> both{0, 1};
  const Graph k4 = add_twins(complete_graph(2), both, true);
  CHECK(k4.is_complete());
  CHECK(k4.edge_count() == 6);

  const std::vector<Vertex> middle{1};
  const Graph tree = add_twins(path_graph(3), middle, false);
  CHECK(tree.vertex_count() == 5);
  CHECK(tree.edge_count() == 4);
  CHECK(is_connected(tree));
  CHECK(tree.degree(1) == 4);
  CHECK(tree.edge(0) == Edge{1, 3});

  CHECK_THROWS_AS(add_twins(path_graph(3), {}, false), InputError);
  const std::vector<Vertex> outside{7};
  CHECK_THROWS_AS(add_twins(path_graph(3), outside, false), InputError);
}

TEST_CASE("iterated twins give complete and complete bipartite graphs") {
  for (int start : {1, 2}) {
    Graph g = complete_graph(start);
    for (int step = 1; step <= 3; ++step) {
      std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
      std::iota(all.begin(), all.end(), 0);
      g = add_twins(g, all, true);
      const int n = start + 2 * step;
      CHECK(g.vertex_count() == n);
      CHECK(g.edge_count() == n * (n - 1) / 2);
      CHECK(g.is_complete());
    }
  }
  for (int a = 1; a <= 4; ++a) {
    Graph g(a);
    std::vector<Vertex> side(static_cast<std::size_t>(a));
    std::iota(side.begin(), side.end(), 0);
    for (int step = 1; step <= 3; ++step) {
      g = add_twins(g, side, false);
      CHECK(g.edge_count() == a * 2 * step);
      for (Vertex x = 0; x < a; ++x) CHECK(g.degree(x) == 2 * step);
      for (Vertex y = a; y < g.vertex_count(); ++y) CHECK(g.degree(y) == a);
    }
  }
}

TEST_CASE("cartesian products") {
  const Graph c4 = cartesian_product(complete_graph(2), complete_graph(2));
  CHECK(c4.edge_count() == 4);
  CHECK(common_degree(c4) == 2);
  CHECK(is_connected(c4));

  CHECK(cartesian_product(path_graph(2), path_graph(3)).edge_count() == 7);
  CHECK(cartesian_product(cycle_graph(3), complete_graph(2)).edge_count() == 9);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n1 = std::uniform_int_distribution<int>(1, 6)(rng);
    const int n2 = std::uniform_int_distribution<int>(1, 6)(rng);
    const Graph g = random_gnm(n1, std::uniform_int_distribution<int>(0, n1 * (n1 - 1) / 2)(rng), rng());
    const Graph h = random_gnm(n2, std::uniform_int_distribution<int>(0, n2 * (n2 - 1) / 2)(rng), rng());
    const Graph p = cartesian_product(g, h);
    CHECK(p.vertex_count() == n1 * n2);
    CHECK(p.edge_count() == n1 * h.edge_count() + n2 * g.edge_count());
    if (is_connected(g) && is_connected(h)) CHECK(is_connected(p));
    for (const auto& e : g.edges())
      for (Vertex x = 0; x < n2; ++x) CHECK(p.adjacent(e.u * n2 + x, e.v * n2 + x));
  }
}

TEST_CASE("edge cut around a vertex set") {
  const Graph g = path_graph(4);
  const Graph h = complete_graph(3);
  const Graph p = cartesian_product(g, h);
  for (Vertex v = 0; v < 4; ++v) {
    std::vector<Vertex> layer{3 * v, 3 * v + 1, 3 * v + 2};
    CHECK(static_cast<int>(min_edge_cut_around(p, layer).size()) == g.degree(v) * 3);
  }

  const Graph with_isolated = disjoint_union(cycle_graph(4), Graph(1));
  const std::vector<Vertex> cycle{0, 1, 2, 3};
  CHECK(min_edge_cut_around(with_isolated, cycle).empty());

  const std::vector<Vertex> one{0};
  CHECK(min_edge_cut_around(cycle_graph(4), one).size() == 2);
}

TEST_CASE("generators") {
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK_THROWS_AS(cycle_graph(2), InputError);
  CHECK_THROWS_AS(generate_from_spec("cycle:2"), InputError);
  CHECK_THROWS_AS(generate_from_spec("pentagon"), InputError);
  CHECK(generate_from_spec("complete_bipartite:2,3") == complete_bipartite_graph(2, 3));
  CHECK(generate_from_spec("random_gnm:8,12,7") == random_gnm(8, 12, 7));
  CHECK(random_gnm(8, 12, 7).edge_count() == 12);

  const Graph fig = figure1_graph();
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 3}, {3, 4}};
  CHECK(fig.edges() == expected);
}

TEST_CASE("orientations") {
  const Digraph c4 = orient(cycle_graph(4), orient_rules::DirectedCycle{});
  std::set<std::pair<int, int>> arcs;
  for (const auto& a : c4.arcs()) arcs.insert({a.tail, a.head});
  CHECK(arcs == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});

  const Digraph fig = orient(figure1_graph(), orient_rules::Figure1{});
  const std::vector<Arc> drawn{{0, 1}, {0, 2}, {3, 0}, {4, 1}, {2, 3}, {3, 4}};
  CHECK(fig.arcs() == drawn);
  CHECK(orient(figure1_graph(), parse_orient_rule("figure1")) == fig);

  const Graph g = random_gnm(7, 12, 2);
  const Digraph low = orient(g, orient_rules::LowToHigh{});
  for (const auto& a : low.arcs()) CHECK(a.tail < a.head);

  CHECK_THROWS_AS(orient(path_graph(4), orient_rules::DirectedCycle{}), InputError);
  CHECK_THROWS_AS(orient(path_graph(4), orient_rules::Figure1{}), InputError);
  const auto explicit_rule = parse_orient_rule("explicit:1-0,2-1");
  CHECK(orient(path_graph(3), explicit_rule).arcs() == std::vector<Arc>{{1, 0}, {2, 1}});
  CHECK_THROWS_AS(parse_orient_rule("sideways"), InputError);
}

TEST_CASE("orientation around an induced 2-path") {
  // u=0, v=1, w=2; 3 hangs off u, 4 off v, 5 off w
  const Graph g(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
  const Digraph d = orient(g, orient_rules::Edgemain{0, 1, 2});
  CHECK(d.arc(0) == Arc{1, 0});
  CHECK(d.arc(1) == Arc{2, 1});
  CHECK(d.arc(2) == Arc{3, 0});
  CHECK(d.arc(3) == Arc{4, 1});
  CHECK(d.arc(4) == Arc{2, 5});
  CHECK(orient(g, parse_orient_rule("edgemain:0,1,2")) == d);
}

TEST_CASE("2-factors") {
  const auto k4 = find_two_factor(complete_graph(4));
  REQUIRE(k4);
  CHECK(is_two_factor(complete_graph(4), *k4));
  CHECK_FALSE(find_two_factor(path_graph(4)));
  CHECK_FALSE(find_two_factor(star_graph(3)));
  const Graph prism = cartesian_product(cycle_graph(3), complete_graph(2));
  const auto f = find_two_factor(prism);
  REQUIRE(f);
  CHECK(f->size() == 6);
  CHECK(is_two_factor(prism, *f));
  CHECK_THROWS_AS(find_two_factor(cycle_graph(14)), LimitError);
  CHECK(find_two_factor(cycle_graph(14), 14));
}
