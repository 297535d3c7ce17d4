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

#include "wchoose/certify.hpp"
#include "wchoose/error.hpp"
#include "wchoose/graph.hpp"
#include "wchoose/serialize.hpp"

using namespace wchoose;

TEST_CASE("integers and rationals") {
  CHECK(to_json(Int(-4)) == Json(-4));
  CHECK(to_json(Int(1) << 80).get<std::string>() == "1208925819614629174706176");
  CHECK(to_json(Rational(3, 4)) == Json("3/4"));
  CHECK(to_json(Rational(5)) == Json(5));
}

TEST_CASE("graph and digraph round trips") {
  const Graph g = figure1_graph();
  CHECK(graph_from_json(to_json(g)) == g);
  const Digraph d = orient(g, orient_rules::Figure1{});
  CHECK(digraph_from_json(to_json(d)) == d);
  CHECK(to_json(g).dump() == R"({"n":5,"edges":[[0,1],[0,2],[0,3],[1,4],[2,3],[3,4]]})");
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,0]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), InputError);
  CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"n":2,"edges":[[0,1]],"arcs":[[1,1]]})")), InputError);
}

TEST_CASE("matrix round trip") {
  IntMatrix m = IntMatrix::from_rows({{1, -2}, {0, 3}});
  m(1, 1) = Int(1) << 90;
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"entries":[1,2,3]})")), InputError);
}

TEST_CASE("certificate round trip") {
  for (const BoundReport& r : {witness_cycle(5), witness_complete(5), witness_edgemain(figure1_graph())}) {
    const Json j = to_json(r.certificate);
    const Certificate back = certificate_from_json(j);
    CHECK(back.digraph == r.certificate.digraph);
    CHECK(back.matrix == r.certificate.matrix);
    CHECK(back.columns == r.certificate.columns);
    CHECK(back.claimed_bound == r.certificate.claimed_bound);
    CHECK(verify(back));
    CHECK(to_json(back) == j);
  }
  Certificate capped = witness_cycle(4).certificate;
  capped.caps = std::vector<int>{2, 2, 2, 2};
  CHECK(certificate_from_json(to_json(capped)).caps == capped.caps);

  const Json report = to_json(witness_cycle(3));
  CHECK(report["bound"] == 2);
  CHECK(report["implied_choosability"] == 3);
  CHECK(report["quantity"] == "mind");
  CHECK(certificate_from_json(report["certificate"]).claimed_bound == 2);
  CHECK_THROWS_AS(certificate_from_json(Json::parse("[1,2]")), InputError);
}

TEST_CASE("lists and stress reports") {
  ListAssignment lists{{{Rational(1), Rational(1, 2)}}, std::nullopt};
  const Json j = to_json(lists);
  CHECK(j["edge_lists"][0][1] == "1/2");
  StressReport r{complete_graph(2), 0, 1, 1, 0, 0, {lists}};
  const Json s = to_json(r);
  CHECK(s["successes"] == 0);
  CHECK(s["failures"].size() == 1);
}
