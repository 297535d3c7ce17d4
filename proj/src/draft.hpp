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

#pragma once

#include <vector>

#include "wchoose/certify.hpp"
#include "wchoose/error.hpp"

namespace wchoose::detail {

// Certificate under construction on a fixed parent graph.
class Draft {
 public:
  explicit Draft(const Digraph& start) : graph_(start.graph()), arcs_(start.arcs()) {}

  const Graph& graph() const { return graph_; }

  void set_arc(EdgeId e, Vertex tail, Vertex head) {
    if (!graph_.edge(e).contains(tail) || !graph_.edge(e).contains(head) || tail == head)
      throw std::logic_error("arc does not match its edge");
    arcs_[static_cast<std::size_t>(e)] = Arc{tail, head};
  }

  void add_column(Combination c) { columns_.push_back(std::move(c)); }
  void add_column(Combination c, int times) {
    for (int i = 0; i < times; ++i) columns_.push_back(c);
  }

  // Copies the sub-report's arcs and columns into the parent.
  void place(const BoundReport& sub, const std::vector<Vertex>& vertex_map) {
    if (sub.certificate.matrix != MatrixKind::A) throw InputError("only edge-matrix certificates can be combined");
    const Digraph& d = sub.certificate.digraph;
    std::vector<EdgeId> edge_map;
    for (const auto& arc : d.arcs()) {
      const Vertex t = vertex_map.at(static_cast<std::size_t>(arc.tail));
      const Vertex h = vertex_map.at(static_cast<std::size_t>(arc.head));
      const auto e = graph_.edge_between(t, h);
      if (!e) throw InputError("sub-report edge missing from the parent graph");
      edge_map.push_back(*e);
      set_arc(*e, t, h);
    }
    for (const auto& combo : sub.certificate.columns) {
      Combination c;
      for (const auto& term : combo) c.push_back(Term{edge_map.at(static_cast<std::size_t>(term.column)), term.coeff});
      columns_.push_back(std::move(c));
    }
  }

  BoundReport finish(int bound) const {
    Certificate cert;
    cert.digraph = Digraph(graph_, arcs_);
    cert.matrix = MatrixKind::A;
    cert.columns = columns_;
    cert.claimed_bound = bound;
    return make_report(std::move(cert));
  }

 private:
  Graph graph_;
  std::vector<Arc> arcs_;
  std::vector<Combination> columns_;
};

}  // namespace wchoose::detail
