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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvident/errors.hpp"
#include "curvident/permutation.hpp"
#include "curvident/rational.hpp"

namespace curvident {

enum class Variance : std::uint8_t { covariant, contravariant };

// Advances a multi-index over {0..n-1}^size in row-major order (last slot
// fastest). Returns false once it wraps around to all zeros.
inline bool next_multi_index(std::span<std::size_t> index, std::size_t n) {
  for (std::size_t pos = index.size(); pos-- > 0;) {
    if (++index[pos] < n) return true;
    index[pos] = 0;
  }
  return false;
}

inline std::size_t int_pow(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  while (exponent-- > 0) out *= base;
  return out;
}

// Dense multi-index array over {0..dim-1}^rank with one variance flag per
// slot. Components are stored row-major. T is Rational for all exact work;
// double is available for quick experiments.
template <class T>
class BasicTensor {
 public:
  using value_type = T;

  BasicTensor() : BasicTensor(1, {}) {}

  BasicTensor(std::size_t dim, std::vector<Variance> slots)
      : dim_(dim), slots_(std::move(slots)) {
    if (dim_ == 0) throw InvalidArgument("tensor dimension must be >= 1");
    data_.assign(int_pow(dim_, slots_.size()), T(0));
  }

  static BasicTensor covariant(std::size_t dim, std::size_t rank) {
    return BasicTensor(dim, std::vector<Variance>(rank, Variance::covariant));
  }
  static BasicTensor contravariant(std::size_t dim, std::size_t rank) {
    return BasicTensor(dim,
                       std::vector<Variance>(rank, Variance::contravariant));
  }
  static BasicTensor scalar(std::size_t dim, T value) {
    BasicTensor t(dim, {});
    t.data_[0] = std::move(value);
    return t;
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return slots_.size(); }
  std::size_t size() const { return data_.size(); }
  const std::vector<Variance>& slots() const { return slots_; }
  Variance variance(std::size_t slot) const { return slots_.at(slot); }

  std::size_t flat_index(std::span<const std::size_t> index) const {
    if (index.size() != rank())
      throw InvalidArgument("multi-index length does not match tensor rank");
    std::size_t flat = 0;
    for (const auto i : index) {
      if (i >= dim_) throw InvalidArgument("tensor index out of range");
      flat = flat * dim_ + i;
    }
    return flat;
  }

  void unflatten(std::size_t flat, std::span<std::size_t> index) const {
    for (std::size_t pos = index.size(); pos-- > 0;) {
      index[pos] = flat % dim_;
      flat /= dim_;
    }
  }

  T& operator[](std::span<const std::size_t> index) {
    return data_[flat_index(index)];
  }
  const T& operator[](std::span<const std::size_t> index) const {
    return data_[flat_index(index)];
  }
  T& at(std::initializer_list<std::size_t> index) {
    return data_[flat_index(std::span(index.begin(), index.size()))];
  }
  const T& at(std::initializer_list<std::size_t> index) const {
    return data_[flat_index(std::span(index.begin(), index.size()))];
  }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }
  const T& flat(std::size_t i) const { return data_[i]; }
  T& flat(std::size_t i) { return data_[i]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T& x) { return curvident::is_zero(x); });
  }

  BasicTensor& operator+=(const BasicTensor& other) {
    require_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& other) {
    require_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }
  BasicTensor& operator*=(const T& factor) {
    for (auto& x : data_) x *= factor;
    return *this;
  }

  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) {
    return a += b;
  }
  friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) {
    return a -= b;
  }
  friend BasicTensor operator-(BasicTensor a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend BasicTensor operator*(const T& factor, BasicTensor a) {
    return a *= factor;
  }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.dim_ == b.dim_ && a.slots_ == b.slots_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const BasicTensor& other) const {
    if (dim_ != other.dim_ || slots_ != other.slots_)
      throw InvalidArgument("tensor shapes differ");
  }

  std::size_t dim_;
  std::vector<Variance> slots_;
  std::vector<T> data_;
};

using Tensor = BasicTensor<Rational>;
using FloatTensor = BasicTensor<double>;

// Slots of a followed by slots of b.
template <class T>
BasicTensor<T> tensor_product(const BasicTensor<T>& a,
                              const BasicTensor<T>& b) {
  if (a.dim() != b.dim())
    throw InvalidArgument("tensor_product: dimension mismatch");
  auto slots = a.slots();
  slots.insert(slots.end(), b.slots().begin(), b.slots().end());
  BasicTensor<T> out(a.dim(), std::move(slots));
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out.flat(k++) = a.flat(i) * b.flat(j);
  return out;
}

// Exact inverse of a nonsingular square 2-slot tensor by Gauss-Jordan
// elimination. The result carries the opposite variances.
template <class T>
BasicTensor<T> invert_metric(const BasicTensor<T>& g) {
  if (g.rank() != 2) throw InvalidArgument("metric must have two slots");
  const std::size_t n = g.dim();
  std::vector<std::vector<T>> a(n, std::vector<T>(2 * n, T(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.at({i, j});
    a[i][n + i] = T(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a[pivot][col])) ++pivot;
    if (pivot == n) throw SingularMetric("metric is singular");
    std::swap(a[pivot], a[col]);
    const T inv = T(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      const T f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  auto flip = [](Variance v) {
    return v == Variance::covariant ? Variance::contravariant
                                    : Variance::covariant;
  };
  BasicTensor<T> out(n, {flip(g.variance(0)), flip(g.variance(1))});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at({i, j}) = a[i][n + j];
  return out;
}

namespace detail {

// Sums t over slot_a == i, slot_b == j with weight w(i, j).
template <class T>
BasicTensor<T> weighted_trace(const BasicTensor<T>& t, std::size_t slot_a,
                              std::size_t slot_b,
                              const std::vector<std::vector<T>>& w) {
  std::vector<Variance> slots;
  for (std::size_t s = 0; s < t.rank(); ++s)
    if (s != slot_a && s != slot_b) slots.push_back(t.variance(s));
  BasicTensor<T> out(t.dim(), std::move(slots));
  const std::size_t n = t.dim();
  std::vector<std::size_t> outer(out.rank(), 0);
  std::vector<std::size_t> full(t.rank(), 0);
  std::size_t flat = 0;
  do {
    for (std::size_t s = 0, o = 0; s < t.rank(); ++s)
      if (s != slot_a && s != slot_b) full[s] = outer[o++];
    T sum(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(w[i][j])) continue;
        full[slot_a] = i;
        full[slot_b] = j;
        sum += w[i][j] * t[full];
      }
    out.flat(flat++) = std::move(sum);
  } while (next_multi_index(outer, n));
  return out;
}

}  // namespace detail

// Contracts slot_a against slot_b. Mixed variances are traced directly;
// two covariant slots are paired through the inverse of g, two contravariant
// slots through g itself. g must be a nonsingular covariant 2-slot tensor.
template <class T>
BasicTensor<T> contract(const BasicTensor<T>& t, std::size_t slot_a,
                        std::size_t slot_b, const BasicTensor<T>& g) {
  if (slot_a >= t.rank() || slot_b >= t.rank() || slot_a == slot_b)
    throw InvalidArgument("contract: slots out of range or equal");
  if (g.dim() != t.dim() || g.rank() != 2)
    throw InvalidArgument("contract: metric shape mismatch");
  const std::size_t n = t.dim();
  std::vector<std::vector<T>> w(n, std::vector<T>(n, T(0)));
  if (t.variance(slot_a) != t.variance(slot_b)) {
    for (std::size_t i = 0; i < n; ++i) w[i][i] = T(1);
  } else {
    // invert_metric also rejects a singular g on the contravariant path
    const auto inverse = invert_metric(g);
    const auto& pairing =
        t.variance(slot_a) == Variance::covariant ? inverse : g;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i][j] = pairing.at({i, j});
  }
  return detail::weighted_trace(t, slot_a, slot_b, w);
}

// Trace of a mixed pair of slots; no metric needed.
template <class T>
BasicTensor<T> contract(const BasicTensor<T>& t, std::size_t slot_a,
                        std::size_t slot_b) {
  if (slot_a >= t.rank() || slot_b >= t.rank() || slot_a == slot_b)
    throw InvalidArgument("contract: slots out of range or equal");
  if (t.variance(slot_a) == t.variance(slot_b))
    throw InvalidArgument("contract: equal variances need a metric");
  std::vector<std::vector<T>> w(t.dim(), std::vector<T>(t.dim(), T(0)));
  for (std::size_t i = 0; i < t.dim(); ++i) w[i][i] = T(1);
  return detail::weighted_trace(t, slot_a, slot_b, w);
}

// out[i_0 .. i_{m-1}] = t[i_{s(0)} .. i_{s(m-1)}]. Slot variances follow
// their components. Applying s and then u equals applying compose(u, s).
template <class T>
BasicTensor<T> permute_slots(const BasicTensor<T>& t, const Permutation& s) {
  if (s.size() != t.rank())
    throw InvalidArgument("permute_slots: permutation size != tensor rank");
  std::vector<Variance> slots(t.rank());
  for (std::size_t a = 0; a < t.rank(); ++a) slots[s(a)] = t.variance(a);
  BasicTensor<T> out(t.dim(), std::move(slots));
  std::vector<std::size_t> index(t.rank(), 0);
  std::vector<std::size_t> source(t.rank(), 0);
  std::size_t flat = 0;
  do {
    for (std::size_t b = 0; b < t.rank(); ++b) source[b] = index[s(b)];
    out.flat(flat++) = t[source];
  } while (next_multi_index(index, t.dim()));
  return out;
}

namespace detail {

template <class T>
BasicTensor<T> average_over_slots(const BasicTensor<T>& t,
                                  std::span<const std::size_t> slots,
                                  bool alternating) {
  for (const auto s : slots) {
    if (s >= t.rank()) throw InvalidArgument("slot out of range");
    if (t.variance(s) != t.variance(slots.front()))
      throw InvalidArgument("(anti)symmetrization over mixed variances");
  }
  std::vector<std::size_t> sorted(slots.begin(), slots.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("repeated slot in (anti)symmetrization");
  BasicTensor<T> sum(t.dim(), t.slots());
  std::size_t count = 0;
  for (const auto& p : all_permutations(slots.size())) {
    auto full = Permutation::identity(t.rank());
    std::vector<std::size_t> image(full.image().begin(), full.image().end());
    for (std::size_t a = 0; a < slots.size(); ++a) image[slots[a]] = slots[p(a)];
    auto term = permute_slots(t, Permutation(std::move(image)));
    if (alternating && p.sign() < 0)
      sum -= term;
    else
      sum += term;
    ++count;
  }
  sum *= T(1) / T(static_cast<long>(count));
  return sum;
}

}  // namespace detail

// Average of t over all permutations of the given slots.
template <class T>
BasicTensor<T> symmetrize(const BasicTensor<T>& t,
                          std::span<const std::size_t> slots) {
  return detail::average_over_slots(t, slots, false);
}

// Signed average of t over all permutations of the given slots.
template <class T>
BasicTensor<T> antisymmetrize(const BasicTensor<T>& t,
                              std::span<const std::size_t> slots) {
  return detail::average_over_slots(t, slots, true);
}

// Sign of the permutation sorting `values`, or 0 if a value repeats.
inline int permutation_symbol(std::span<const std::size_t> values) {
  std::vector<std::size_t> v(values.begin(), values.end());
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) sign = -sign;
    }
  return sign;
}

// delta^{j_1..j_m}_{i_1..i_m} = det[delta^{j_a}_{i_b}], stored with the m
// upper slots first. Integer components; no 1/m! factor.
template <class T = Rational>
BasicTensor<T> generalized_kronecker(std::size_t m, std::size_t n) {
  if (m == 0) throw InvalidArgument("generalized_kronecker: m must be >= 1");
  std::vector<Variance> slots(m, Variance::contravariant);
  slots.resize(2 * m, Variance::covariant);
  BasicTensor<T> out(n, std::move(slots));
  if (m > n) return out;
  std::vector<std::size_t> index(2 * m, 0);
  std::size_t flat = 0;
  do {
    std::span<const std::size_t> upper(index.data(), m);
    std::span<const std::size_t> lower(index.data() + m, m);
    const int su = permutation_symbol(upper);
    const int sl = su == 0 ? 0 : permutation_symbol(lower);
    if (sl != 0) {
      std::vector<std::size_t> a(upper.begin(), upper.end());
      std::vector<std::size_t> b(lower.begin(), lower.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a == b) out.flat(flat) = T(su * sl);
    }
    ++flat;
  } while (next_multi_index(index, n));
  return out;
}

// Applies a matrix to one slot: out[.. i ..] = sum_j m(i, j) t[.. j ..], and
// relabels that slot's variance. Used to raise and lower indices.
template <class T>
BasicTensor<T> transform_slot(const BasicTensor<T>& t, std::size_t slot,
                              const BasicTensor<T>& m, Variance result) {
  if (slot >= t.rank() || m.rank() != 2 || m.dim() != t.dim())
    throw InvalidArgument("transform_slot: shape mismatch");
  auto slots = t.slots();
  slots[slot] = result;
  BasicTensor<T> out(t.dim(), std::move(slots));
  std::vector<std::size_t> index(t.rank(), 0);
  std::vector<std::size_t> source(t.rank(), 0);
  std::size_t flat = 0;
  do {
    source = index;
    T sum(0);
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const auto& f = m.at({index[slot], j});
      if (is_zero(f)) continue;
      source[slot] = j;
      sum += f * t[source];
    }
    out.flat(flat++) = std::move(sum);
  } while (next_multi_index(index, t.dim()));
  return out;
}

// Raises a covariant slot with the inverse metric.
template <class T>
BasicTensor<T> raise_slot(const BasicTensor<T>& t, std::size_t slot,
                          const BasicTensor<T>& metric) {
  if (t.variance(slot) != Variance::covariant)
    throw InvalidArgument("raise_slot: slot is already contravariant");
  return transform_slot(t, slot, invert_metric(metric),
                        Variance::contravariant);
}

// Lowers a contravariant slot with the metric.
template <class T>
BasicTensor<T> lower_slot(const BasicTensor<T>& t, std::size_t slot,
                          const BasicTensor<T>& metric) {
  if (t.variance(slot) != Variance::contravariant)
    throw InvalidArgument("lower_slot: slot is already covariant");
  return transform_slot(t, slot, metric, Variance::covariant);
}

// Converts an exact tensor for floating-point experiments.
inline FloatTensor to_float(const Tensor& t) {
  FloatTensor out(t.dim(), t.slots());
  for (std::size_t i = 0; i < t.size(); ++i) out.flat(i) = t.flat(i).get_d();
  return out;
}

}  // namespace curvident
