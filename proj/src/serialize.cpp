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

#include "wchoose/serialize.hpp"

#include <limits>

#include "wchoose/error.hpp"

namespace wchoose {

Json to_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(Int(numerator(x)));
  return x.str();
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Json to_json(const Digraph& d) {
  Json j = to_json(d.graph());
  Json arcs = Json::array();
  for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head});
  j["arcs"] = arcs;
  return j;
}

Json to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (const auto& x : m.entries()) entries.push_back(to_json(x));
  Json j{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
  if (!m.row_labels().empty()) j["row_labels"] = m.row_labels();
  if (!m.col_labels().empty()) j["col_labels"] = m.col_labels();
  return j;
}

Json to_json(const Certificate& c) {
  Json columns = Json::array();
  for (const auto& combo : c.columns) {
    Json terms = Json::array();
    for (const auto& t : combo) terms.push_back({t.column, t.coeff});
    columns.push_back(terms);
  }
  Json arcs = Json::array();
  for (const auto& a : c.digraph.arcs()) arcs.push_back({a.tail, a.head});
  Json j{{"base", {{"graph", to_json(c.digraph.graph())}, {"orientation", arcs}, {"matrix", to_string(c.matrix)}}},
         {"columns", columns},
         {"bound", c.claimed_bound}};
  if (c.caps) j["caps"] = *c.caps;
  return j;
}

Json to_json(const BoundReport& r) {
  return {{"graph", to_json(r.graph)},
          {"quantity", to_string(r.quantity)},
          {"bound", r.bound},
          {"implied_choosability", r.implied_choosability},
          {"edge_only", r.edge_only},
          {"certificate", to_json(r.certificate)}};
}

Json to_json(const ListAssignment& lists) {
  auto encode = [](const std::vector<std::vector<Rational>>& ls) {
    Json out = Json::array();
    for (const auto& l : ls) {
      Json row = Json::array();
      for (const auto& x : l) row.push_back(to_json(x));
      out.push_back(row);
    }
    return out;
  };
  Json j{{"edge_lists", encode(lists.edge_lists)}};
  if (lists.vertex_lists) j["vertex_lists"] = encode(*lists.vertex_lists);
  return j;
}

Json to_json(const StressReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  Json j{{"graph", to_json(r.graph)}, {"k", r.k},           {"l", r.l},
         {"trials", r.trials},        {"successes", r.successes}, {"failures", failures}};
  if (r.limit_exceeded > 0) j["limit_exceeded"] = r.limit_exceeded;
  return j;
}

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw InputError("expected an integer");
}

std::vector<Arc> arcs_from_json(const Json& j) {
  std::vector<Arc> arcs;
  for (const auto& a : j) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  return arcs;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Graph graph_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return Graph(j.at("n").get<int>(), std::move(edges));
  });
}

Digraph digraph_from_json(const Json& j) {
  return guarded([&] { return Digraph(graph_from_json(j), arcs_from_json(j.at("arcs"))); });
}

IntMatrix matrix_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Int> entries;
    for (const auto& x : j.at("entries")) entries.push_back(int_from_json(x));
    IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>(), std::move(entries));
    if (j.contains("row_labels")) m.set_row_labels(j.at("row_labels").get<std::vector<std::string>>());
    if (j.contains("col_labels")) m.set_col_labels(j.at("col_labels").get<std::vector<std::string>>());
    return m;
  });
}

Certificate certificate_from_json(const Json& j) {
  return guarded([&] {
    const Json& base = j.at("base");
    Certificate c;
    c.digraph = Digraph(graph_from_json(base.at("graph")), arcs_from_json(base.at("orientation")));
    const auto kind = base.at("matrix").get<std::string>();
    if (kind != "A" && kind != "M") throw InputError("base matrix must be \"A\" or \"M\"");
    c.matrix = kind == "A" ? MatrixKind::A : MatrixKind::M;
    for (const auto& combo : j.at("columns")) {
      Combination terms;
      for (const auto& t : combo) terms.push_back({t.at(0).get<int>(), t.at(1).get<long long>()});
      c.columns.push_back(std::move(terms));
    }
    c.claimed_bound = j.at("bound").get<int>();
    if (j.contains("caps")) c.caps = j.at("caps").get<std::vector<int>>();
    return c;
  });
}

}  // namespace wchoose
