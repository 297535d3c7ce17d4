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

#include "wchoose/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "wchoose/error.hpp"
#include "wchoose/incidence.hpp"

namespace wchoose {

std::vector<Rational> vertex_sums(const Graph& g, const Weighting& w) {
  if (static_cast<int>(w.edge_weights.size()) != g.edge_count())
    throw InputError("weighting has " + std::to_string(w.edge_weights.size()) + " edge weights, graph has " +
                     std::to_string(g.edge_count()) + " edges");
  std::vector<Rational> sums(static_cast<std::size_t>(g.vertex_count()));
  if (w.vertex_weights) {
    if (static_cast<int>(w.vertex_weights->size()) != g.vertex_count())
      throw InputError("weighting has the wrong number of vertex weights");
    sums = *w.vertex_weights;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    sums[static_cast<std::size_t>(g.edge(e).u)] += w.edge_weights[static_cast<std::size_t>(e)];
    sums[static_cast<std::size_t>(g.edge(e).v)] += w.edge_weights[static_cast<std::size_t>(e)];
  }
  return sums;
}

bool is_proper(const Graph& g, const Weighting& w) {
  const auto sums = vertex_sums(g, w);
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return sums[static_cast<std::size_t>(e.u)] != sums[static_cast<std::size_t>(e.v)];
  });
}

namespace {

template <class T>
class WeightSearch {
 public:
  WeightSearch(const Graph& g, std::vector<std::vector<T>> lists, bool has_vertex_vars)
      : g_(g), lists_(std::move(lists)), offset_(has_vertex_vars ? g.vertex_count() : 0) {
    const int n = g.vertex_count();
    const int vars = static_cast<int>(lists_.size());
    touches_.resize(static_cast<std::size_t>(vars));
    completes_.resize(static_cast<std::size_t>(vars));
    finish_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < vars; ++i) {
      if (i < offset_) {
        touches_[static_cast<std::size_t>(i)] = {i};
      } else {
        const Edge& e = g.edge(i - offset_);
        touches_[static_cast<std::size_t>(i)] = {e.u, e.v};
      }
      for (const Vertex x : touches_[static_cast<std::size_t>(i)]) finish_[static_cast<std::size_t>(x)] = i;
    }
    for (Vertex x = 0; x < n; ++x)
      if (finish_[static_cast<std::size_t>(x)] >= 0)
        completes_[static_cast<std::size_t>(finish_[static_cast<std::size_t>(x)])].push_back(x);
    sums_.assign(static_cast<std::size_t>(n), T(0));
    choice_.assign(static_cast<std::size_t>(vars), 0);
  }

  bool run() { return step(0); }
  const std::vector<int>& choice() const { return choice_; }

 private:
  bool step(int i) {
    if (i == static_cast<int>(lists_.size())) return true;
    const auto& touched = touches_[static_cast<std::size_t>(i)];
    const auto& list = lists_[static_cast<std::size_t>(i)];
    for (std::size_t c = 0; c < list.size(); ++c) {
      for (const Vertex x : touched) sums_[static_cast<std::size_t>(x)] += list[c];
      if (consistent(i)) {
        choice_[static_cast<std::size_t>(i)] = static_cast<int>(c);
        if (step(i + 1)) return true;
      }
      for (const Vertex x : touched) sums_[static_cast<std::size_t>(x)] -= list[c];
    }
    return false;
  }

  bool consistent(int i) const {
    for (const Vertex x : completes_[static_cast<std::size_t>(i)])
      for (const auto& inc : g_.incident(x))
        if (finish_[static_cast<std::size_t>(inc.neighbor)] <= i &&
            sums_[static_cast<std::size_t>(x)] == sums_[static_cast<std::size_t>(inc.neighbor)])
          return false;
    return true;
  }

  const Graph& g_;
  std::vector<std::vector<T>> lists_;
  int offset_;
  std::vector<std::vector<Vertex>> touches_;
  std::vector<std::vector<Vertex>> completes_;
  std::vector<int> finish_;
  std::vector<T> sums_;
  std::vector<int> choice_;
};

void check_list(const std::vector<Rational>& list, const std::string& what) {
  if (list.empty()) throw InputError(what + " has an empty list");
  std::set<Rational> seen(list.begin(), list.end());
  if (seen.size() != list.size()) throw InputError(what + " has a list with repeated values");
}

}  // namespace

std::optional<Weighting> find_weighting(const Graph& g, const ListAssignment& lists, double limit) {
  if (static_cast<int>(lists.edge_lists.size()) != g.edge_count())
    throw InputError("list assignment does not match the number of edges");
  std::vector<std::vector<Rational>> all;
  if (lists.vertex_lists) {
    if (static_cast<int>(lists.vertex_lists->size()) != g.vertex_count())
      throw InputError("list assignment does not match the number of vertices");
    for (const auto& l : *lists.vertex_lists) {
      check_list(l, "vertex");
      all.push_back(l);
    }
  }
  for (const auto& l : lists.edge_lists) {
    check_list(l, "edge");
    all.push_back(l);
  }
  double space = 1;
  for (const auto& l : all) space *= static_cast<double>(l.size());
  if (space > limit) throw LimitError("weighting search space exceeds the configured limit");

  const bool vertex_vars = lists.vertex_lists.has_value();
  std::vector<int> choice;
  // Clear denominators so the common case runs on machine integers.
  Int lcm = 1;
  Int biggest = 0;
  for (const auto& l : all)
    for (const auto& x : l) lcm = boost::multiprecision::lcm(lcm, Int(denominator(x)));
  for (const auto& l : all)
    for (const auto& x : l) biggest = std::max(biggest, Int(abs(numerator(x)) * (lcm / denominator(x))));
  if (biggest < (Int(1) << 40)) {
    std::vector<std::vector<long long>> scaled;
    for (const auto& l : all) {
      std::vector<long long> row;
      for (const auto& x : l) row.push_back(static_cast<long long>(numerator(x) * (lcm / denominator(x))));
      scaled.push_back(std::move(row));
    }
    WeightSearch<long long> search(g, std::move(scaled), vertex_vars);
    if (!search.run()) return std::nullopt;
    choice = search.choice();
  } else {
    WeightSearch<Rational> search(g, all, vertex_vars);
    if (!search.run()) return std::nullopt;
    choice = search.choice();
  }

  Weighting w;
  std::size_t i = 0;
  if (vertex_vars) {
    w.vertex_weights.emplace();
    for (; i < static_cast<std::size_t>(g.vertex_count()); ++i)
      w.vertex_weights->push_back(all[i][static_cast<std::size_t>(choice[i])]);
  }
  for (; i < all.size(); ++i) w.edge_weights.push_back(all[i][static_cast<std::size_t>(choice[i])]);
  return w;
}

Universe parse_universe(std::string_view text) {
  Universe u;
  constexpr std::string_view kRational = "rational:";
  if (text.starts_with(kRational)) {
    u.kind = Universe::Kind::Rational;
    text.remove_prefix(kRational.size());
  }
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw InputError("universe must look like lo..hi");
  auto parse = [&](std::string_view part) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) throw InputError("bad universe bound: " + std::string(part));
    return v;
  };
  u.lo = parse(text.substr(0, dots));
  u.hi = parse(text.substr(dots + 2));
  if (u.lo > u.hi) throw InputError("universe lower bound exceeds upper bound");
  return u;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<Rational> draw_list(std::mt19937_64& rng, const Universe& u, int size) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  std::uniform_int_distribution<long long> den(1, std::max(1, u.max_denominator));
  while (static_cast<int>(out.size()) < size) {
    Rational x;
    if (u.kind == Universe::Kind::IntegerRange) {
      x = std::uniform_int_distribution<long long>(u.lo, u.hi)(rng);
    } else {
      const long long q = den(rng);
      x = Rational(std::uniform_int_distribution<long long>(u.lo * q, u.hi * q)(rng), q);
    }
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

}  // namespace

StressReport stress_choosability(const Graph& g, int k, int l, int trials, std::uint64_t seed,
                                 const Universe& universe, double limit) {
  if (trials < 1) throw InputError("need at least one trial");
  if (k < 0 || l < 1) throw InputError("list sizes must be k >= 0 and l >= 1");
  if (universe.kind == Universe::Kind::IntegerRange && universe.hi - universe.lo + 1 < std::max(k, l))
    throw InputError("universe has fewer values than the list size");
  StressReport report{g, k, l, trials, 0, 0, {}};
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(splitmix64(seed + static_cast<std::uint64_t>(t)));
    ListAssignment lists;
    if (k > 0) {
      lists.vertex_lists.emplace();
      for (Vertex v = 0; v < g.vertex_count(); ++v) lists.vertex_lists->push_back(draw_list(rng, universe, k));
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) lists.edge_lists.push_back(draw_list(rng, universe, l));
    try {
      const auto w = find_weighting(g, lists, limit);
      if (w && is_proper(g, *w))
        ++report.successes;
      else
        report.failures.push_back(std::move(lists));
    } catch (const LimitError&) {
      ++report.limit_exceeded;
    }
  }
  return report;
}

Index exact_mind_small(const Graph& g, bool total, const ExpansionOptions& expansion, const PindOptions& search) {
  const Digraph d = orient(g, orient_rules::LowToHigh{});
  const Index by_poly = colouring_mind(d, total, expansion);
  const auto bundle = build_bundle(d);
  const Index by_perm = pind(total ? bundle.m_mat : bundle.a, {}, search).value;
  if (by_poly != by_perm)
    throw VerificationError("monomial index " + index_to_string(by_poly) + " disagrees with permanent index " +
                            index_to_string(by_perm));
  return by_poly;
}

}  // namespace wchoose
