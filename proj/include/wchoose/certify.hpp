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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wchoose/graph.hpp"
#include "wchoose/incidence.hpp"
#include "wchoose/integer.hpp"
#include "wchoose/matrix.hpp"
#include "wchoose/permanent.hpp"

namespace wchoose {

enum class MatrixKind { A, M };
enum class Quantity { Mind, Tmind };

std::string to_string(MatrixKind kind);
std::string to_string(Quantity q);

struct Term {
  int column;
  long long coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

using Combination = std::vector<Term>;

/// Square matrix of linear combinations of base-matrix columns together with
/// the claimed multiplicity bound. The base matrix is A_D or M_D of `digraph`.
struct Certificate {
  Digraph digraph;
  MatrixKind matrix = MatrixKind::A;
  std::vector<Combination> columns;
  int claimed_bound = 0;
  std::optional<std::vector<int>> caps;  // per base column
};

struct VerifyResult {
  bool ok = false;
  Int permanent;
  std::vector<int> usage;  // per base column
  int max_usage = 0;
  std::string reason;  // empty when ok
};

/// Throws InputError when the certificate does not fit the base matrix.
VerifyResult verify_detailed(const Certificate& cert, const IncidenceBundle& bundle);
bool verify(const Certificate& cert, const IncidenceBundle& bundle);
bool verify(const Certificate& cert);

/// The square matrix L whose columns are the certificate's combinations.
IntMatrix assemble(const Certificate& cert, const IncidenceBundle& bundle);
/// n_j: number of certificate columns in which base column j has a nonzero coefficient.
std::vector<int> usage_counts(const Certificate& cert, int base_cols);

struct BoundReport {
  Graph graph;
  Quantity quantity = Quantity::Mind;
  int bound = 0;
  Certificate certificate;
  int implied_choosability = 1;  // bound + 1
  bool edge_only = true;         // no vertex column used: (1, bound+1) claim
};

/// Report on a subgraph plus the map from its vertices to the parent's.
struct PlacedReport {
  BoundReport report;
  std::vector<Vertex> vertex_map;
};

/// Wraps a certificate into a report and verifies it; throws VerificationError
/// when it does not verify.
BoundReport make_report(Certificate cert);

/// Moves a report onto an isomorphic copy: vertex x of report.graph becomes
/// vertex_map[x] of `target`. Rows are permuted, so the permanent is unchanged.
BoundReport relabel(const BoundReport& report, const Graph& target, std::span<const Vertex> vertex_map);

// Witness constructions. Every returned report has been verified.

/// Exact permanent-index search on A_D (or M_D), optionally capped per column.
BoundReport witness_search(const Digraph& d, MatrixKind kind = MatrixKind::A, std::span<const int> caps = {},
                           const PindOptions& options = {});
/// Same with one uniform cap for every column.
BoundReport witness_search_capped(const Digraph& d, int cap, const PindOptions& options = {});

/// Directed cycle, column multiset found by search with cap 2.
BoundReport witness_cycle(int n);

/// Report for add_twins(g_report.graph, U, joined) with bound max{2, g_report.bound}.
BoundReport witness_twins(const BoundReport& g_report, std::span<const Vertex> U, bool joined);

/// Edgeless graph: empty certificate, bound 0.
BoundReport witness_edgeless(int n);

/// K_n with bound 2 (n != 2).
BoundReport witness_complete(int n);
/// K_{a,b} in the standard labelling, bound 2.
BoundReport witness_complete_bipartite(int a, int b);
/// Any tree on >= 3 vertices, search with cap 2.
BoundReport witness_tree(const Graph& tree);

/// Certificate with bound <= t_degeneracy(g, 2) following the induced 2-path
/// recursion. g nice with at least 3 vertices.
BoundReport witness_edgemain(const Graph& g);

/// Decomposition along the cut around `h_vertices`. `h_report` is a report on
/// induced_subgraph(g, h_vertices) (same vertex order); `rest` must cover every
/// edge of g - h_vertices. When `two_factor` is empty one is searched for in
/// g[h_vertices]; a supplied one is given in g's edge ids.
BoundReport witness_decomp(const Graph& g, std::span<const Vertex> h_vertices, const BoundReport& h_report,
                           std::span<const PlacedReport> rest,
                           std::optional<std::vector<EdgeId>> two_factor = std::nullopt);

/// Report for cartesian_product(g, h) with bound <= |V(h)| * degeneracy(g) + h_report.bound.
/// h regular on >= 3 vertices with a 2-factor.
BoundReport witness_product(const Graph& g, const Graph& h, const BoundReport& h_report);

}  // namespace wchoose
