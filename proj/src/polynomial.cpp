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

#include "wchoose/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <type_traits>
#include <unordered_map>

#include "wchoose/error.hpp"
#include "wchoose/incidence.hpp"
#include "wchoose/permanent.hpp"

namespace wchoose {

void SparsePoly::add_term(Exponents exponents, const Int& coeff) {
  if (static_cast<int>(exponents.size()) != num_vars_) throw InputError("exponent vector length mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int SparsePoly::coefficient(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != num_vars_)
    throw InputError("expected " + std::to_string(num_vars_) + " exponents, got " + std::to_string(exponents.size()));
  const auto it = terms_.find(Exponents(exponents.begin(), exponents.end()));
  return it == terms_.end() ? Int(0) : it->second;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    const bool negative = coeff < 0;
    const Int mag = negative ? Int(-coeff) : coeff;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (any) mono << '*';
      mono << 'x' << i;
      if (exps[i] > 1) mono << '^' << exps[i];
      any = true;
    }
    if (!any)
      out << mag;
    else if (mag == 1)
      out << mono.str();
    else
      out << mag << '*' << mono.str();
  }
  return out.str();
}

namespace {

// 4-bit exponent per variable, up to 32 variables.
struct Packed {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  int get(int var) const {
    const auto word = var < 16 ? lo : hi;
    return static_cast<int>((word >> (4 * (var % 16))) & 0xF);
  }
  Packed bumped(int var) const {
    Packed p = *this;
    (var < 16 ? p.lo : p.hi) += std::uint64_t{1} << (4 * (var % 16));
    return p;
  }
  friend bool operator==(const Packed&, const Packed&) = default;
};

struct PackedHash {
  std::size_t operator()(const Packed& p) const {
    std::uint64_t x = p.lo ^ (p.hi * 0x9E3779B97F4A7C15ULL);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Int checked_mul(const Int& a, const Int& b) { return a * b; }
inline Int checked_add(const Int& a, const Int& b) { return a + b; }

template <class C>
using TermMap = std::unordered_map<Packed, C, PackedHash>;

template <class C>
TermMap<C> expand_packed(const std::vector<std::vector<Int>>& factors, int cap, std::size_t max_terms) {
  TermMap<C> current;
  current.emplace(Packed{}, C(1));
  for (const auto& row : factors) {
    std::vector<std::pair<int, C>> linear;
    for (std::size_t var = 0; var < row.size(); ++var) {
      if (row[var] == 0) continue;
      if constexpr (std::is_same_v<C, Int>)
        linear.emplace_back(static_cast<int>(var), row[var]);
      else
        linear.emplace_back(static_cast<int>(var), static_cast<C>(static_cast<long long>(row[var])));
    }
    TermMap<C> next;
    next.reserve(current.size() * 2);
    for (const auto& [key, coeff] : current) {
      for (const auto& [var, a] : linear) {
        if (key.get(var) >= cap) continue;
        auto& slot = next[key.bumped(var)];
        slot = checked_add(slot, checked_mul(coeff, a));
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    if (next.size() > max_terms) throw LimitError("polynomial expansion exceeded the term limit");
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

struct Expansion {
  int num_vars = 0;
  TermMap<Int> terms;
};

// Largest possible exponent of each variable: the number of factors it appears in.
int max_occurrence(const std::vector<std::vector<Int>>& factors, int num_vars) {
  int best = 0;
  for (int var = 0; var < num_vars; ++var) {
    int count = 0;
    for (const auto& row : factors) count += row[static_cast<std::size_t>(var)] != 0;
    best = std::max(best, count);
  }
  return best;
}

Expansion expand(const Digraph& d, bool total, const ExpansionOptions& options, std::optional<int> cap) {
  const auto& g = d.graph();
  if (g.edge_count() > options.max_edges)
    throw LimitError("expansion limited to " + std::to_string(options.max_edges) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  const int vars = g.edge_count() + (total ? g.vertex_count() : 0);
  if (vars > 32) throw LimitError("expansion supports at most 32 variables");
  const auto factors = factor_coefficients(d, total);
  const int occ = max_occurrence(factors, vars);
  int effective = cap.value_or(occ);
  effective = std::min(effective, occ);
  if (effective > 15) throw LimitError("exponents above 15 are not supported by the packed expansion");
  Expansion out;
  out.num_vars = vars;
  try {
    for (auto& [k, c] : expand_packed<std::int64_t>(factors, effective, options.max_terms)) out.terms.emplace(k, Int(c));
  } catch (const Overflow&) {
    out.terms = expand_packed<Int>(factors, effective, options.max_terms);
  }
  return out;
}

SparsePoly to_sparse(const Expansion& e) {
  SparsePoly p(e.num_vars);
  for (const auto& [key, coeff] : e.terms) {
    SparsePoly::Exponents exps(static_cast<std::size_t>(e.num_vars));
    for (int v = 0; v < e.num_vars; ++v) exps[static_cast<std::size_t>(v)] = key.get(v);
    p.add_term(std::move(exps), coeff);
  }
  return p;
}

}  // namespace

std::vector<std::vector<Int>> factor_coefficients(const Digraph& d, bool total) {
  const auto bundle = build_bundle(d);
  const auto& source = total ? bundle.m_mat : bundle.a;
  std::vector<std::vector<Int>> rows;
  for (int r = 0; r < source.rows(); ++r) {
    std::vector<Int> row;
    for (int c = 0; c < source.cols(); ++c) row.push_back(source(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

SparsePoly expand_colouring_poly(const Digraph& d, bool total, const ExpansionOptions& options) {
  return to_sparse(expand(d, total, options, options.exponent_cap));
}

Index mind_poly(const SparsePoly& p) {
  if (p.is_zero()) return std::nullopt;
  int best = std::numeric_limits<int>::max();
  for (const auto& [exps, coeff] : p.terms()) {
    const int h = exps.empty() ? 0 : *std::max_element(exps.begin(), exps.end());
    best = std::min(best, h);
  }
  return best;
}

Index colouring_mind(const Digraph& d, bool total, const ExpansionOptions& options) {
  const auto& g = d.graph();
  if (g.edge_count() == 0) return 0;  // empty product
  const int vars = g.edge_count() + (total ? g.vertex_count() : 0);
  const int occ = max_occurrence(factor_coefficients(d, total), vars);
  for (int cap = 1; cap <= occ; ++cap) {
    const auto e = expand(d, total, options, cap);
    if (!e.terms.empty()) return cap;
  }
  return std::nullopt;
}

bool check_coeff_per_relation(const Digraph& d, std::span<const int> exponents) {
  const auto& g = d.graph();
  const int m = g.edge_count();
  const bool total = static_cast<int>(exponents.size()) == m + g.vertex_count() && g.vertex_count() > 0;
  if (!total && static_cast<int>(exponents.size()) != m)
    throw InputError("exponent vector must have m or m+n entries");
  int sum = 0;
  int top = 0;
  for (const int k : exponents) {
    if (k < 0) throw InputError("negative exponent");
    sum += k;
    top = std::max(top, k);
  }
  if (sum != m) throw InputError("exponents must sum to the number of edges");
  ExpansionOptions options;
  options.exponent_cap = std::max(top, 1);
  const auto poly = expand_colouring_poly(d, total, options);
  const Int coeff = poly.coefficient(exponents);

  const auto bundle = build_bundle(d);
  const auto& base = total ? bundle.m_mat : bundle.a;
  std::vector<int> columns;
  Int denom = 1;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    columns.insert(columns.end(), static_cast<std::size_t>(exponents[j]), static_cast<int>(j));
    denom *= factorial(exponents[j]);
  }
  return coeff * denom == per_square(base.select_columns(columns));
}

}  // namespace wchoose
