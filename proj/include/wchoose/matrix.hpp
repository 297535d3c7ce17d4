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

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wchoose/integer.hpp"

namespace wchoose {

/// Dense row-major matrix of arbitrary-precision integers with optional
/// row/column labels.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<Int> entries);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(int n);
  static IntMatrix filled(int rows, int cols, const Int& value);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Int& operator()(int r, int c) const { return entries_[index(r, c)]; }
  Int& operator()(int r, int c) { return entries_[index(r, c)]; }
  const std::vector<Int>& entries() const { return entries_; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<std::string> labels);

  /// A(K): the columns listed in K, repeats allowed.
  IntMatrix select_columns(std::span<const int> columns) const;
  IntMatrix submatrix(std::span<const int> rows, std::span<const int> columns) const;
  IntMatrix transposed() const;
  std::vector<Int> column(int c) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// (a | b); labels are concatenated when both sides carry them.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

/// Right-aligned signed grid. A '|' is drawn after column `split_after - 1`
/// when given, matching the (A_D | B_D) layout.
std::string format_grid(const IntMatrix& m, std::optional<int> split_after = std::nullopt);

}  // namespace wchoose
