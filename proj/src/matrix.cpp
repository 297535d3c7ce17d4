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

#include "wchoose/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "wchoose/error.hpp"

namespace wchoose {

IntMatrix::IntMatrix(int rows, int cols) : IntMatrix(rows, cols, {}) {}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
  const auto size = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (entries_.empty()) entries_.assign(size, Int(0));
  if (entries_.size() != size)
    throw InputError("matrix has " + std::to_string(entries_.size()) + " entries, expected " + std::to_string(size));
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  std::vector<Int> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw InputError("ragged matrix rows");
    for (const long long x : row) entries.emplace_back(x);
  }
  return IntMatrix(r, c, std::move(entries));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::filled(int rows, int cols, const Int& value) {
  return IntMatrix(rows, cols,
                   std::vector<Int>(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), value));
}

void IntMatrix::set_row_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != rows_) throw InputError("row label count mismatch");
  row_labels_ = std::move(labels);
}

void IntMatrix::set_col_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != cols_) throw InputError("column label count mismatch");
  col_labels_ = std::move(labels);
}

IntMatrix IntMatrix::select_columns(std::span<const int> columns) const {
  IntMatrix out(rows_, static_cast<int>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const int c = columns[k];
    if (c < 0 || c >= cols_) throw InputError("column index " + std::to_string(c) + " out of range");
    for (int r = 0; r < rows_; ++r) out(r, static_cast<int>(k)) = (*this)(r, c);
  }
  out.row_labels_ = row_labels_;
  if (!col_labels_.empty())
    for (const int c : columns) out.col_labels_.push_back(col_labels_[static_cast<std::size_t>(c)]);
  return out;
}

IntMatrix IntMatrix::submatrix(std::span<const int> rows, std::span<const int> columns) const {
  IntMatrix out(static_cast<int>(rows.size()), static_cast<int>(columns.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], columns[j]);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  out.row_labels_ = col_labels_;
  out.col_labels_ = row_labels_;
  return out;
}

std::vector<Int> IntMatrix::column(int c) const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hconcat: row counts differ");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  out.set_row_labels(!a.row_labels().empty() ? a.row_labels() : b.row_labels());
  if (!a.col_labels().empty() && !b.col_labels().empty()) {
    auto labels = a.col_labels();
    labels.insert(labels.end(), b.col_labels().begin(), b.col_labels().end());
    out.set_col_labels(std::move(labels));
  }
  return out;
}

std::string format_grid(const IntMatrix& m, std::optional<int> split_after) {
  std::size_t width = 1;
  for (const auto& x : m.entries()) width = std::max(width, x.str().size());
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      if (split_after && c == *split_after) out << "| ";
      const auto s = m(r, c).str();
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace wchoose
