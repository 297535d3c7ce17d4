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

#include <json.hpp>

#include "wchoose/certify.hpp"
#include "wchoose/graph.hpp"
#include "wchoose/matrix.hpp"
#include "wchoose/oracle.hpp"

namespace wchoose {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const Int& x);
Json to_json(const Rational& x);
Json to_json(const Graph& g);          // {n, edges}
Json to_json(const Digraph& d);        // {n, edges, arcs}
Json to_json(const IntMatrix& m);      // {rows, cols, entries, row_labels?, col_labels?}
Json to_json(const Certificate& c);    // {base:{graph, orientation, matrix}, columns, bound, caps?}
Json to_json(const BoundReport& r);
Json to_json(const ListAssignment& lists);
Json to_json(const StressReport& r);   // {graph, k, l, trials, successes, failures}

Graph graph_from_json(const Json& j);
Digraph digraph_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

}  // namespace wchoose
