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

#include <cstddef>
#include <span>
#include <vector>

#include "wchoose/integer.hpp"
#include "wchoose/matrix.hpp"

namespace wchoose {

/// Exact permanent of a square matrix. The support is first split into its
/// irreducible blocks (perfect matching + strongly connected components); each
/// block is evaluated with Ryser's formula over a Gray-code subset walk. 0x0 -> 1.
Int per_square(const IntMatrix& a);

/// Ryser's formula on the whole matrix, no block splitting.
Int per_ryser(const IntMatrix& a);

inline constexpr int kNaivePermanentLimit = 10;

/// Permutation-sum expansion along rows. Independent reference for tests;
/// throws LimitError above kNaivePermanentLimit rows.
Int per_naive(const IntMatrix& a);

/// Rectangular permanent (rows <= cols): sum of per over all row-sized column
/// subsets.
Int per_rect(const IntMatrix& a);

/// Size of the largest square submatrix with nonzero permanent.
int permanent_rank(const IntMatrix& a);

/// Largest matching in the support bipartite graph (rows vs columns).
int term_rank(const IntMatrix& a);

/// A^(k) = [A A ... A].
IntMatrix replicate(const IntMatrix& a, int k);

struct PindResult {
  Index value;              // nullopt = infinity
  std::vector<int> witness;  // sorted column indices, one per row, when finite

  bool finite() const { return value.has_value(); }
};

struct PindOptions {
  int max_rows = 30;
  std::size_t max_states = 4'000'000;  // live partial-permanent entries
};

/// Permanent index: smallest k such that some size-m multiset of columns, each
/// used at most min(k, caps[j]) times, has nonzero permanent. `caps` empty means
/// uncapped. Depth-first over multisets in ascending column order with the
/// earliest columns taken as often as allowed, so the witness is the
/// lexicographically smallest one at the minimal k.
PindResult pind(const IntMatrix& a, std::span<const int> caps = {}, const PindOptions& options = {});

/// Caps for M = (A | B): first `left_cols` columns get `left_cap`, the rest `right_cap`.
std::vector<int> split_caps(int left_cols, int left_cap, int right_cols, int right_cap);

}  // namespace wchoose
