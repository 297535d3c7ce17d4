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

#include "wchoose/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#include "wchoose/error.hpp"

namespace wchoose {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

using i128 = __int128;

bool fits_i64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

// Ryser with checked 128-bit arithmetic; false on overflow.
bool ryser_fixed(const std::vector<std::int64_t>& a, int n, i128& out) {
  std::vector<i128> row_sum(static_cast<std::size_t>(n), 0);
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  i128 total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const bool add = !in[static_cast<std::size_t>(j)];
    in[static_cast<std::size_t>(j)] = add;
    for (int i = 0; i < n; ++i) {
      const i128 v = a[static_cast<std::size_t>(i * n + j)];
      row_sum[static_cast<std::size_t>(i)] += add ? v : -v;
    }
    i128 prod = 1;
    for (int i = 0; i < n && prod != 0; ++i)
      if (__builtin_mul_overflow(prod, row_sum[static_cast<std::size_t>(i)], &prod)) return false;
    // Gray code k ^ (k >> 1) has popcount parity equal to the parity of |S|.
    const bool odd = std::popcount(k ^ (k >> 1)) & 1;
    if (odd ? __builtin_sub_overflow(total, prod, &total) : __builtin_add_overflow(total, prod, &total)) return false;
  }
  out = (n % 2 == 0) ? total : -total;
  return true;
}

Int ryser_big(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<Int> row_sum(static_cast<std::size_t>(n), Int(0));
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  Int total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const bool add = !in[static_cast<std::size_t>(j)];
    in[static_cast<std::size_t>(j)] = add;
    for (int i = 0; i < n; ++i) {
      if (add)
        row_sum[static_cast<std::size_t>(i)] += m(i, j);
      else
        row_sum[static_cast<std::size_t>(i)] -= m(i, j);
    }
    Int prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[static_cast<std::size_t>(i)];
    if (std::popcount(k ^ (k >> 1)) & 1)
      total -= prod;
    else
      total += prod;
  }
  return (n % 2 == 0) ? total : Int(-total);
}

Int to_int(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Int hi = static_cast<std::uint64_t>(mag >> 64);
  Int out = (hi << 64) + Int(static_cast<std::uint64_t>(mag));
  return neg ? Int(-out) : out;
}

// Kuhn's augmenting paths on the support; returns the column matched to each row (-1 if none).
std::vector<int> support_matching(const std::vector<std::vector<int>>& support, int cols) {
  const int rows = static_cast<int>(support.size());
  std::vector<int> row_of_col(static_cast<std::size_t>(cols), -1);
  std::vector<int> col_of_row(static_cast<std::size_t>(rows), -1);
  std::vector<int> seen(static_cast<std::size_t>(cols), -1);
  std::function<bool(int, int)> augment = [&](int r, int stamp) {
    for (const int c : support[static_cast<std::size_t>(r)]) {
      if (seen[static_cast<std::size_t>(c)] == stamp) continue;
      seen[static_cast<std::size_t>(c)] = stamp;
      if (row_of_col[static_cast<std::size_t>(c)] < 0 || augment(row_of_col[static_cast<std::size_t>(c)], stamp)) {
        row_of_col[static_cast<std::size_t>(c)] = r;
        col_of_row[static_cast<std::size_t>(r)] = c;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < rows; ++r) augment(r, r);
  return col_of_row;
}

std::vector<std::vector<int>> support_of(const IntMatrix& a) {
  std::vector<std::vector<int>> support(static_cast<std::size_t>(a.rows()));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0) support[static_cast<std::size_t>(r)].push_back(c);
  return support;
}

// Tarjan SCC over rows; edge r -> r' when row r meets the column matched to r'.
std::vector<std::vector<int>> row_blocks(const std::vector<std::vector<int>>& support,
                                         const std::vector<int>& col_of_row) {
  const int n = static_cast<int>(support.size());
  std::vector<int> row_of_col(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) row_of_col[static_cast<std::size_t>(col_of_row[static_cast<std::size_t>(r)])] = r;
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> blocks;
  int counter = 0;
  std::function<void(int)> visit = [&](int r) {
    index[static_cast<std::size_t>(r)] = low[static_cast<std::size_t>(r)] = counter++;
    stack.push_back(r);
    on_stack[static_cast<std::size_t>(r)] = true;
    for (const int c : support[static_cast<std::size_t>(r)]) {
      const int s = row_of_col[static_cast<std::size_t>(c)];
      if (s == r) continue;
      if (index[static_cast<std::size_t>(s)] < 0) {
        visit(s);
        low[static_cast<std::size_t>(r)] = std::min(low[static_cast<std::size_t>(r)], low[static_cast<std::size_t>(s)]);
      } else if (on_stack[static_cast<std::size_t>(s)]) {
        low[static_cast<std::size_t>(r)] = std::min(low[static_cast<std::size_t>(r)], index[static_cast<std::size_t>(s)]);
      }
    }
    if (low[static_cast<std::size_t>(r)] == index[static_cast<std::size_t>(r)]) {
      std::vector<int> block;
      int s = -1;
      do {
        s = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(s)] = false;
        block.push_back(s);
      } while (s != r);
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
  };
  for (int r = 0; r < n; ++r)
    if (index[static_cast<std::size_t>(r)] < 0) visit(r);
  return blocks;
}

}  // namespace

Int per_ryser(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("permanent of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  if (n > 62) throw LimitError("Ryser evaluation limited to 62 rows");
  bool small = true;
  std::vector<std::int64_t> fixed;
  fixed.reserve(a.entries().size());
  for (const auto& x : a.entries()) {
    // keep row sums far from the 128-bit edge
    if (!fits_i64(x) || boost::multiprecision::abs(x) > (Int(1) << 48)) {
      small = false;
      break;
    }
    fixed.push_back(static_cast<std::int64_t>(x));
  }
  if (small) {
    i128 out = 0;
    if (ryser_fixed(fixed, n, out)) return to_int(out);
  }
  return ryser_big(a);
}

Int per_square(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("per_square: matrix is " + std::to_string(a.rows()) + "x" +
                                       std::to_string(a.cols()));
  const int n = a.rows();
  if (n == 0) return 1;
  const auto support = support_of(a);
  const auto col_of_row = support_matching(support, n);
  if (std::any_of(col_of_row.begin(), col_of_row.end(), [](int c) { return c < 0; })) return 0;
  const auto blocks = row_blocks(support, col_of_row);
  if (blocks.size() == 1) return per_ryser(a);
  Int result = 1;
  for (const auto& rows : blocks) {
    std::vector<int> cols;
    cols.reserve(rows.size());
    for (const int r : rows) cols.push_back(col_of_row[static_cast<std::size_t>(r)]);
    std::sort(cols.begin(), cols.end());
    result *= rows.size() == 1 ? a(rows[0], cols[0]) : per_ryser(a.submatrix(rows, cols));
    if (result == 0) break;
  }
  return result;
}

Int per_naive(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("per_naive: matrix is not square");
  const int n = a.rows();
  if (n > kNaivePermanentLimit)
    throw LimitError("per_naive is limited to " + std::to_string(kNaivePermanentLimit) + " rows");
  std::function<Int(int, unsigned)> expand = [&](int row, unsigned used) -> Int {
    if (row == n) return Int(1);
    Int sum = 0;
    for (int c = 0; c < n; ++c)
      if (!(used & (1u << c)) && a(row, c) != 0) sum += a(row, c) * expand(row + 1, used | (1u << c));
    return sum;
  };
  return expand(0, 0);
}

namespace {

// Calls f(subset) for every k-subset of 0..n-1 in lexicographic order until f returns true.
template <class F>
bool for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return false;
  while (true) {
    if (f(std::span<const int>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Int per_rect(const IntMatrix& a) {
  if (a.rows() > a.cols())
    throw InputError("per_rect needs rows <= cols, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  if (a.is_square()) return per_square(a);
  std::vector<int> all_rows(static_cast<std::size_t>(a.rows()));
  std::iota(all_rows.begin(), all_rows.end(), 0);
  Int total = 0;
  for_each_subset(a.cols(), a.rows(), [&](std::span<const int> cols) {
    total += per_square(a.submatrix(all_rows, cols));
    return false;
  });
  return total;
}

int term_rank(const IntMatrix& a) {
  const auto col_of_row = support_matching(support_of(a), a.cols());
  return static_cast<int>(std::count_if(col_of_row.begin(), col_of_row.end(), [](int c) { return c >= 0; }));
}

int permanent_rank(const IntMatrix& a) {
  for (int r = term_rank(a); r >= 1; --r) {
    if (binomial(a.rows(), r) * binomial(a.cols(), r) > 2e7)
      throw LimitError("permanent_rank: too many " + std::to_string(r) + "x" + std::to_string(r) + " submatrices");
    const bool found = for_each_subset(a.rows(), r, [&](std::span<const int> rows) {
      return for_each_subset(a.cols(), r, [&](std::span<const int> cols) {
        return per_square(a.submatrix(rows, cols)) != 0;
      });
    });
    if (found) return r;
  }
  return 0;
}

IntMatrix replicate(const IntMatrix& a, int k) {
  if (k < 1) throw InputError("replicate needs k >= 1");
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(k * a.cols()));
  for (int copy = 0; copy < k; ++copy)
    for (int c = 0; c < a.cols(); ++c) cols.push_back(c);
  return a.select_columns(cols);
}

std::vector<int> split_caps(int left_cols, int left_cap, int right_cols, int right_cap) {
  std::vector<int> caps(static_cast<std::size_t>(left_cols), left_cap);
  caps.insert(caps.end(), static_cast<std::size_t>(right_cols), right_cap);
  return caps;
}

}  // namespace wchoose
