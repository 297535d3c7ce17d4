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

#include "wchoose/graph.hpp"
#include "wchoose/matrix.hpp"

namespace wchoose {

/// The signed incidence matrices of an orientation D with m edges and n vertices.
///   a (m x m):     a[i][j] = +1 if e_j meets head(e_i), -1 if it meets tail(e_i), a[i][i] = 0
///   b (m x n):     b[i][v] = +1 if v = head(e_i), -1 if v = tail(e_i)
///   m_mat (m x (m+n)) = (a | b)
/// Rows are edges in input order; columns of a are edges, columns of b vertices.
struct IncidenceBundle {
  Digraph digraph;
  IntMatrix a;
  IntMatrix b;
  IntMatrix m_mat;
};

IncidenceBundle build_bundle(const Digraph& d);

/// Just the edge-by-edge matrix.
IntMatrix edge_matrix(const Digraph& d);

}  // namespace wchoose
