// Copyright 2026 The curvident Authors.
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
#include <optional>
#include <span>
#include <vector>

#include "curvident/rational.hpp"

namespace curvident {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  // Appends a row; the first row fixes the column count of an empty matrix.
  void append_row(std::span<const Rational> row);
  // Stacks the rows of `below` under this matrix.
  void append_rows(const Matrix& below);

  bool is_zero() const;
  bool is_symmetric() const;
  Vector multiply(std::span<const Rational> x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Incremental row echelon form over Q. Rows are reduced against the stored
// pivots as they arrive; only independent rows are kept, so memory stays
// bounded by the column count no matter how many rows are streamed in.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  // Returns true if the row was independent of everything seen so far.
  bool insert(std::span<const Rational> row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rank() == cols_; }

 private:
  std::size_t cols_;
  // Pivot rows normalized to a leading 1, kept sorted by pivot column.
  std::vector<std::pair<std::size_t, Vector>> pivots_;
};

std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}, one vector per free column of the reduced row
// echelon form.
std::vector<Vector> nullspace(const Matrix& m);

// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

// Multiplies by the least common denominator and divides by the content so
// that the entries are coprime integers with a positive leading entry.
Vector primitive_integer_vector(Vector v);

}  // namespace curvident
