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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wchoose/graph.hpp"
#include "wchoose/integer.hpp"
#include "wchoose/permanent.hpp"
#include "wchoose/polynomial.hpp"

namespace wchoose {

/// Lists of admissible weights. Without vertex lists every vertex weight is 0
/// (pure edge weighting).
struct ListAssignment {
  std::vector<std::vector<Rational>> edge_lists;
  std::optional<std::vector<std::vector<Rational>>> vertex_lists;
};

struct Weighting {
  std::vector<Rational> edge_weights;
  std::optional<std::vector<Rational>> vertex_weights;
};

/// w(v) + sum of the weights of the edges at v. Throws InputError on size mismatch.
std::vector<Rational> vertex_sums(const Graph& g, const Weighting& w);
/// Adjacent vertices receive different sums.
bool is_proper(const Graph& g, const Weighting& w);

inline constexpr double kDefaultSearchLimit = 1e8;

/// Backtracking over variables in order (vertex weights, then edges), checking
/// each vertex against its neighbours as soon as all its weights are fixed.
/// nullopt when no proper weighting exists. Throws LimitError when the product
/// of the list sizes exceeds `limit`, InputError on empty lists or repeated values.
std::optional<Weighting> find_weighting(const Graph& g, const ListAssignment& lists,
                                        double limit = kDefaultSearchLimit);

/// Source of random list values.
struct Universe {
  enum class Kind { IntegerRange, Rational };
  Kind kind = Kind::IntegerRange;
  long long lo = -10;
  long long hi = 10;
  int max_denominator = 6;  // rationals only
};

/// "lo..hi" for integers, "rational:lo..hi" for rationals in that range.
Universe parse_universe(std::string_view text);

struct StressReport {
  Graph graph;
  int k = 0;
  int l = 0;
  int trials = 0;
  int successes = 0;
  int limit_exceeded = 0;
  std::vector<ListAssignment> failures;

  double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
};

/// Draws `trials` random (k,l) list assignments (k per vertex, 0 for none; l per
/// edge; distinct values per list) and runs find_weighting on each. Trial i is
/// seeded from seed + i.
StressReport stress_choosability(const Graph& g, int k, int l, int trials, std::uint64_t seed,
                                 const Universe& universe = {}, double limit = kDefaultSearchLimit);

/// mind (or tmind when `total`) by polynomial expansion and by permanent index;
/// throws VerificationError when the two disagree.
Index exact_mind_small(const Graph& g, bool total, const ExpansionOptions& expansion = {},
                       const PindOptions& search = {});

}  // namespace wchoose
