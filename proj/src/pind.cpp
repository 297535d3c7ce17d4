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

// Permanent-index search.
//
// A multiset of columns is grown one column index at a time. Alongside it we
// keep, for every set S of rows, the permanent of the rows-S by chosen-columns
// submatrix (Laplace expansion along the chosen columns). Only nonzero entries
// are stored. If every entry vanishes, no completion can have nonzero permanent
// and the branch is cut; entries whose missing rows cannot be covered by the
// remaining columns are dropped as well.

#include <algorithm>
#include <cstdint>

#include "wchoose/error.hpp"
#include "wchoose/permanent.hpp"

namespace wchoose {

namespace {

using Mask = std::uint32_t;
using i128 = __int128;

struct Overflow {};

inline i128 mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline i128 add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Int mul(const Int& a, const Int& b) { return a * b; }
inline Int add(const Int& a, const Int& b) { return a + b; }

template <class T>
T convert(const Int& x) {
  if constexpr (std::is_same_v<T, Int>) {
    return x;
  } else {
    if (boost::multiprecision::abs(x) > (Int(1) << 62)) throw Overflow{};
    return static_cast<T>(static_cast<long long>(x));
  }
}

template <class T>
class MultisetSearch {
 public:
  using State = std::vector<std::pair<Mask, T>>;

  MultisetSearch(const IntMatrix& a, const PindOptions& options)
      : rows_(a.rows()), cols_(a.cols()), full_(rows_ == 32 ? ~Mask{0} : (Mask{1} << rows_) - 1), options_(options) {
    nonzeros_.resize(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c)
      for (int r = 0; r < rows_; ++r)
        if (a(r, c) != 0) nonzeros_[static_cast<std::size_t>(c)].emplace_back(r, convert<T>(a(r, c)));
  }

  bool run(const std::vector<int>& caps, std::vector<int>& witness) {
    caps_ = caps;
    suffix_cover_.assign(static_cast<std::size_t>(cols_ + 1), 0);
    suffix_cap_.assign(static_cast<std::size_t>(cols_ + 1), 0);
    for (int c = cols_ - 1; c >= 0; --c) {
      Mask cover = 0;
      if (caps_[static_cast<std::size_t>(c)] > 0)
        for (const auto& [r, v] : nonzeros_[static_cast<std::size_t>(c)]) cover |= Mask{1} << r;
      suffix_cover_[static_cast<std::size_t>(c)] = suffix_cover_[static_cast<std::size_t>(c + 1)] | cover;
      suffix_cap_[static_cast<std::size_t>(c)] =
          std::min(rows_, suffix_cap_[static_cast<std::size_t>(c + 1)] + caps_[static_cast<std::size_t>(c)]);
    }
    chosen_.clear();
    State start{{Mask{0}, T(1)}};
    if (!dfs(0, 0, filter(start, 0))) return false;
    witness = chosen_;
    return true;
  }

 private:
  State filter(State s, int next_col) const {
    const Mask cover = suffix_cover_[static_cast<std::size_t>(next_col)];
    std::erase_if(s, [&](const auto& entry) { return (~entry.first & full_ & ~cover) != 0; });
    return s;
  }

  State add_column(const State& f, int c) const {
    State out;
    const auto& nz = nonzeros_[static_cast<std::size_t>(c)];
    out.reserve(f.size() * nz.size());
    for (const auto& [mask, value] : f)
      for (const auto& [r, v] : nz)
        if (!(mask & (Mask{1} << r))) out.emplace_back(mask | (Mask{1} << r), mul(value, v));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    State merged;
    for (auto& entry : out) {
      if (!merged.empty() && merged.back().first == entry.first)
        merged.back().second = add(merged.back().second, entry.second);
      else
        merged.push_back(std::move(entry));
    }
    std::erase_if(merged, [](const auto& entry) { return entry.second == 0; });
    if (merged.size() > options_.max_states) throw LimitError("pind search state exceeded the configured limit");
    return merged;
  }

  bool dfs(int c, int taken, const State& f) {
    if (f.empty()) return false;
    if (taken == rows_) return true;
    if (c == cols_ || suffix_cap_[static_cast<std::size_t>(c)] < rows_ - taken) return false;
    const int most = std::min(caps_[static_cast<std::size_t>(c)], rows_ - taken);
    std::vector<State> powers{f};
    for (int k = 1; k <= most; ++k) {
      powers.push_back(add_column(powers.back(), c));
      if (powers.back().empty()) break;
    }
    for (int k = static_cast<int>(powers.size()) - 1; k >= 0; --k) {
      const State next = filter(powers[static_cast<std::size_t>(k)], c + 1);
      chosen_.insert(chosen_.end(), static_cast<std::size_t>(k), c);
      if (dfs(c + 1, taken + k, next)) return true;
      chosen_.resize(chosen_.size() - static_cast<std::size_t>(k));
    }
    return false;
  }

  int rows_;
  int cols_;
  Mask full_;
  PindOptions options_;
  std::vector<std::vector<std::pair<int, T>>> nonzeros_;
  std::vector<int> caps_;
  std::vector<Mask> suffix_cover_;
  std::vector<int> suffix_cap_;
  std::vector<int> chosen_;
};

bool search_at(const IntMatrix& a, const std::vector<int>& caps, const PindOptions& options,
               std::vector<int>& witness) {
  try {
    MultisetSearch<i128> fast(a, options);
    return fast.run(caps, witness);
  } catch (const Overflow&) {
    MultisetSearch<Int> slow(a, options);
    return slow.run(caps, witness);
  }
}

}  // namespace

PindResult pind(const IntMatrix& a, std::span<const int> caps, const PindOptions& options) {
  const int m = a.rows();
  if (m == 0) return {0, {}};
  if (m > options.max_rows || m > 32)
    throw LimitError("pind search limited to " + std::to_string(std::min(options.max_rows, 32)) + " rows");
  if (!caps.empty() && static_cast<int>(caps.size()) != a.cols())
    throw InputError("pind: " + std::to_string(caps.size()) + " caps for " + std::to_string(a.cols()) + " columns");
  std::vector<int> limit(caps.begin(), caps.end());
  if (limit.empty()) limit.assign(static_cast<std::size_t>(a.cols()), m);
  // A size-m multiset never uses a column more than m times, so k = m is exhaustive.
  std::vector<int> previous;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> effective(limit.size());
    for (std::size_t j = 0; j < limit.size(); ++j) effective[j] = std::clamp(limit[j], 0, k);
    if (effective == previous) break;  // caps saturated; larger k changes nothing
    std::vector<int> witness;
    if (search_at(a, effective, options, witness)) return {k, witness};
    previous = std::move(effective);
  }
  return {std::nullopt, {}};
}

}  // namespace wchoose
