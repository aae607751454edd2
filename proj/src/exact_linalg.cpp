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

#include "curvident/exact_linalg.hpp"

#include <algorithm>

#include "curvident/errors.hpp"

namespace curvident {

void Matrix::append_row(std::span<const Rational> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw InvalidArgument("append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& below) {
  for (std::size_t r = 0; r < below.rows(); ++r) append_row(below.row(r));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return curvident::is_zero(x); });
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Vector Matrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw InvalidArgument("multiply: width mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!curvident::is_zero(x[c])) out[r] += (*this)(r, c) * x[c];
  return out;
}

bool RowEchelon::insert(std::span<const Rational> row) {
  if (row.size() != cols_) throw InvalidArgument("RowEchelon: width mismatch");
  if (full()) return false;
  Vector v(row.begin(), row.end());
  for (const auto& [col, pivot] : pivots_) {
    if (is_zero(v[col])) continue;
    const Rational f = v[col];
    for (std::size_t c = col; c < cols_; ++c)
      if (!is_zero(pivot[c])) v[c] -= f * pivot[c];
  }
  std::size_t lead = 0;
  while (lead < cols_ && is_zero(v[lead])) ++lead;
  if (lead == cols_) return false;
  const Rational inv = Rational(1) / v[lead];
  for (std::size_t c = lead; c < cols_; ++c) v[c] *= inv;
  // Forward elimination in pivot-column order is enough; stored rows do not
  // need to be fully reduced.
  const auto pos = std::lower_bound(
      pivots_.begin(), pivots_.end(), lead,
      [](const auto& entry, std::size_t col) { return entry.first < col; });
  pivots_.emplace(pos, lead, std::move(v));
  return true;
}

std::size_t rank(const Matrix& m) {
  RowEchelon echelon(m.cols());
  for (std::size_t r = 0; r < m.rows() && !echelon.full(); ++r)
    echelon.insert(m.row(r));
  return echelon.rank();
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vector>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && is_zero(a[p][col])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c)
        if (!is_zero(a[row][c])) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& m) {
  std::vector<Vector> a;
  for (std::size_t r = 0; r < m.rows(); ++r)
    a.emplace_back(m.row(r).begin(), m.row(r).end());
  const auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw InvalidArgument("solve: height mismatch");
  std::vector<Vector> a;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row(m.row(r).begin(), m.row(r).end());
    row.push_back(b[r]);
    a.push_back(std::move(row));
  }
  const auto pivots = rref(a, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][m.cols()];
  return x;
}

Vector primitive_integer_vector(Vector v) {
  Integer lcm_den(1);
  for (const auto& x : v)
    if (!is_zero(x)) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                             x.get_den_mpz_t());
  Integer content(0);
  for (auto& x : v) {
    x *= lcm_den;
    if (!is_zero(x)) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                             x.get_num_mpz_t());
  }
  if (sgn(content) == 0) return v;
  const auto lead = std::find_if(v.begin(), v.end(),
                                 [](const Rational& x) { return !is_zero(x); });
  if (sgn(*lead) < 0) content = -content;
  for (auto& x : v) x /= content;
  return v;
}

}  // namespace curvident
