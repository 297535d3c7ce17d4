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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wchoose/graph.hpp"
#include "wchoose/integer.hpp"

namespace wchoose {

/// Exact multivariate polynomial: exponent vector -> nonzero coefficient.
class SparsePoly {
 public:
  using Exponents = std::vector<int>;

  SparsePoly() = default;
  explicit SparsePoly(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  /// Adds `coeff` to the term; zero sums are removed.
  void add_term(Exponents exponents, const Int& coeff);
  /// Throws InputError when the exponent vector has the wrong length.
  Int coefficient(std::span<const int> exponents) const;
  /// Monomials sorted by exponent vector, e.g. "-x0*x1 + 2*x2^2". Zero is "0".
  std::string to_string() const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  int num_vars_ = 0;
  std::map<Exponents, Int> terms_;
};

struct ExpansionOptions {
  int max_edges = 16;
  /// When set, monomials with any exponent above the cap are dropped during
  /// the product; the surviving coefficients are exact.
  std::optional<int> exponent_cap;
  std::size_t max_terms = 40'000'000;
};

/// Coefficient vector of each linear factor X_head - X_tail (or Y_head - Y_tail
/// when `total`), one row per arc. Variables: edges 0..m-1, then vertices.
std::vector<std::vector<Int>> factor_coefficients(const Digraph& d, bool total);

/// Fully expanded P_D (m variables) or T_D (m+n variables).
SparsePoly expand_colouring_poly(const Digraph& d, bool total, const ExpansionOptions& options = {});

/// Minimum over monomials of the largest exponent; nullopt for the zero polynomial.
Index mind_poly(const SparsePoly& p);

/// mind of P_D / T_D by expanding with exponent caps 1, 2, ... until a monomial
/// survives. Avoids the full expansion when the index is small.
Index colouring_mind(const Digraph& d, bool total, const ExpansionOptions& options = {});

/// coefficient(x^K) * prod k_j! == per(A(K)), where A(K) repeats column j of A_D
/// (or M_D when `exponents` has m+n entries) k_j times. The sign is +: every
/// factor of the product is literally the matching row of the matrix.
bool check_coeff_per_relation(const Digraph& d, std::span<const int> exponents);

}  // namespace wchoose
