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
#include "wchoose/error.hpp"
#include "wchoose/graph.hpp"
#include "wchoose/incidence.hpp"
#include "wchoose/oracle.hpp"
#include "wchoose/permanent.hpp"
#include "wchoose/polynomial.hpp"

using namespace wchoose;

namespace {

bool same(const SparsePoly& p, const oracle::Poly& q) {
  if (p.term_count() != q.size()) return false;
  for (const auto& [exps, c] : q)
    if (p.coefficient(exps) != c) return false;
  return true;
}

std::vector<Graph> corpus_up_to(int max_n) {
  std::vector<Graph> out;
  for (auto& g : read_graph_corpus_file(WCHOOSE_FIXTURES "/connected_le7.graphs"))
    if (g.vertex_count() <= max_n) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("sparse polynomial basics") {
  SparsePoly p(2);
  CHECK(p.is_zero());
  CHECK(p.to_string() == "0");
  p.add_term({1, 0}, 2);
  p.add_term({0, 2}, -1);
  p.add_term({1, 0}, -2);
  CHECK(p.term_count() == 1);
  CHECK(p.to_string() == "-x1^2");
  CHECK(p.coefficient(std::vector<int>{0, 2}) == -1);
  CHECK(p.coefficient(std::vector<int>{1, 1}) == 0);
  CHECK_THROWS_AS(p.coefficient(std::vector<int>{1}), InputError);
  CHECK(mind_poly(p) == 2);
  CHECK_FALSE(mind_poly(SparsePoly(3)).has_value());
}

TEST_CASE("small colouring polynomials") {
  const Digraph p3 = orient(path_graph(3), orient_rules::LowToHigh{});
  CHECK(expand_colouring_poly(p3, false).to_string() == "-x0*x1");
  const Digraph k2(complete_graph(2), {{0, 1}});
  CHECK(expand_colouring_poly(k2, false).is_zero());
  CHECK_FALSE(colouring_mind(k2, false).has_value());
  CHECK(colouring_mind(k2, true) == 1);
}

TEST_CASE("figure fixture polynomial") {
  const Digraph d = orient(figure1_graph(), orient_rules::Figure1{});
  const auto rows = factor_coefficients(d, false);
  REQUIRE(rows.size() == 6);
  // first factor x4 - x2 - x3 in 1-based edge names
  CHECK(rows[0] == std::vector<Int>{0, -1, -1, 1, 0, 0});
  const auto p = expand_colouring_poly(d, false);
  CHECK(same(p, oracle::colouring_poly(d, false)));
  CHECK(p.coefficient(std::vector<int>(6, 1)) == -4);
  CHECK(mind_poly(p) == 1);
  CHECK(colouring_mind(d, false) == 1);
  CHECK(colouring_mind(d, true) == 1);
  CHECK(factor_coefficients(d, true)[0].size() == 11);
}

TEST_CASE("expansion matches the product of factors") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const int m = std::uniform_int_distribution<int>(0, std::min(8, n * (n - 1) / 2))(rng);
    const Digraph d = orient(random_gnm(n, m, rng()), orient_rules::LowToHigh{});
    for (bool total : {false, true}) {
      const auto full = expand_colouring_poly(d, total);
      const auto ref = oracle::colouring_poly(d, total);
      CHECK(same(full, ref));
      CHECK(mind_poly(full) == oracle::mind(ref));
      CHECK(colouring_mind(d, total) == oracle::mind(ref));
      // homogeneous of degree m
      for (const auto& [exps, c] : full.terms()) CHECK(std::accumulate(exps.begin(), exps.end(), 0) == m);
      ExpansionOptions capped;
      capped.exponent_cap = 2;
      const auto low = expand_colouring_poly(d, total, capped);
      for (const auto& [exps, c] : ref) {
        const bool small = exps.empty() || *std::max_element(exps.begin(), exps.end()) <= 2;
        CHECK(low.coefficient(exps) == (small ? c : Int(0)));
      }
    }
  }
}

TEST_CASE("coefficients equal scaled permanents") {
  const Digraph fig = orient(figure1_graph(), orient_rules::Figure1{});
  CHECK(check_coeff_per_relation(fig, std::vector<int>{1, 1, 1, 1, 1, 1}));
  CHECK(check_coeff_per_relation(fig, std::vector<int>{2, 0, 1, 1, 2, 0}));
  CHECK(check_coeff_per_relation(fig, std::vector<int>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(check_coeff_per_relation(fig, std::vector<int>{1, 1}), InputError);
  CHECK_THROWS_AS(check_coeff_per_relation(fig, std::vector<int>{1, 1, 1, 1, 1, 0}), InputError);

  std::mt19937_64 rng(31);
  for (const auto& g : corpus_up_to(5)) {
    if (g.edge_count() > 8) continue;
    const Digraph d = orient(g, orient_rules::LowToHigh{});
    const int m = g.edge_count();
    const int vars = m + g.vertex_count();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> k(static_cast<std::size_t>(vars), 0);
      for (int i = 0; i < m; ++i) ++k[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, vars - 1)(rng))];
      CHECK(check_coeff_per_relation(d, k));
    }
  }
}

TEST_CASE("the index does not depend on the orientation") {
  std::mt19937_64 rng(41);
  for (const auto& g : corpus_up_to(5)) {
    if (!is_nice(g) || g.edge_count() == 0) continue;
    const Index base = colouring_mind(orient(g, orient_rules::LowToHigh{}), false);
    std::vector<Arc> arcs;
    std::bernoulli_distribution flip(0.5);
    for (const auto& e : g.edges()) arcs.push_back(flip(rng) ? Arc{e.v, e.u} : Arc{e.u, e.v});
    CHECK(colouring_mind(Digraph(g, arcs), false) == base);
  }
}

TEST_CASE("polynomial index equals permanent index") {
  for (const auto& g : corpus_up_to(5)) {
    const Digraph d = orient(g, orient_rules::LowToHigh{});
    const auto bundle = build_bundle(d);
    CHECK(colouring_mind(d, false) == pind(bundle.a).value);
    CHECK(colouring_mind(d, true) == pind(bundle.m_mat).value);
    CHECK(exact_mind_small(g, false) == pind(bundle.a).value);
  }
}

TEST_CASE("total index never exceeds the edge index") {
  for (const auto& g : corpus_up_to(6)) {
    if (g.edge_count() > 10) continue;
    const Digraph d = orient(g, orient_rules::LowToHigh{});
    const Index mind = colouring_mind(d, false);
    const Index tmind = colouring_mind(d, true);
    REQUIRE(tmind.has_value());
    if (mind) CHECK(*tmind <= *mind);
  }
}

TEST_CASE("disconnected graphs take the largest component index") {
  const Graph a = cycle_graph(5);
  const Graph b = complete_graph(4);
  const Index ia = colouring_mind(orient(a, orient_rules::LowToHigh{}), false);
  const Index ib = colouring_mind(orient(b, orient_rules::LowToHigh{}), false);
  const Index both = colouring_mind(orient(disjoint_union(a, b), orient_rules::LowToHigh{}), false);
  REQUIRE(ia);
  REQUIRE(ib);
  CHECK(both == std::max(*ia, *ib));
}

TEST_CASE("expansion limits") {
  ExpansionOptions small;
  small.max_edges = 5;
  const Digraph d = orient(complete_graph(4), orient_rules::LowToHigh{});
  CHECK_THROWS_AS(expand_colouring_poly(d, false, small), LimitError);
  CHECK_THROWS_AS(colouring_mind(d, false, small), LimitError);
}
