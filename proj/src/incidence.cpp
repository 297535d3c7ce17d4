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

#include "wchoose/incidence.hpp"

namespace wchoose {

namespace {

std::vector<std::string> labels(char prefix, int count) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

IntMatrix edge_matrix(const Digraph& d) {
  const auto& g = d.graph();
  const int m = g.edge_count();
  IntMatrix a(m, m);
  for (EdgeId i = 0; i < m; ++i) {
    // In a simple graph no other edge meets both endpoints of e_i, and e_i
    // itself meets both, so its diagonal entry cancels to 0.
    for (const auto& inc : g.incident(d.head(i)))
      if (inc.edge != i) a(i, inc.edge) = 1;
    for (const auto& inc : g.incident(d.tail(i)))
      if (inc.edge != i) a(i, inc.edge) = -1;
  }
  a.set_row_labels(labels('e', m));
  a.set_col_labels(labels('e', m));
  return a;
}

IncidenceBundle build_bundle(const Digraph& d) {
  const auto& g = d.graph();
  const int m = g.edge_count();
  const int n = g.vertex_count();
  IntMatrix a = edge_matrix(d);
  IntMatrix b(m, n);
  for (EdgeId i = 0; i < m; ++i) {
    b(i, d.head(i)) = 1;
    b(i, d.tail(i)) = -1;
  }
  b.set_row_labels(labels('e', m));
  b.set_col_labels(labels('v', n));
  IntMatrix mm = hconcat(a, b);
  return IncidenceBundle{d, std::move(a), std::move(b), std::move(mm)};
}

}  // namespace wchoose
