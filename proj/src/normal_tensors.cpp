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

#include "curvident/normal_tensors.hpp"

#include <algorithm>
#include <map>

#include "curvident/errors.hpp"

namespace curvident {

std::size_t symmetric_power_dimension(std::size_t n, std::size_t k) {
  // C(n + k - 1, k), exact at every step
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n + i - 1) / i;
  return out;
}

namespace {

using Key = std::vector<std::uint8_t>;

void multisets(std::size_t n, std::size_t size, std::size_t from, Key& current,
               std::vector<Key>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t v = from; v < n; ++v) {
    current.push_back(static_cast<std::uint8_t>(v));
    multisets(n, size, v, current, out);
    current.pop_back();
  }
}

// (a, b, rest) with a <= b and rest sorted, where {a, b} is taken out of the
// sorted multiset `content` at positions i < j.
Key split(const Key& content, std::size_t i, std::size_t j) {
  Key key{content[i], content[j]};
  for (std::size_t t = 0; t < content.size(); ++t)
    if (t != i && t != j) key.push_back(content[t]);
  return key;
}

}  // namespace

NormalTensorSpace::NormalTensorSpace(std::size_t n, std::size_t r)
    : n_(n), r_(r) {
  if (n < 1) throw InvalidArgument("normal tensors: n must be >= 1");
  if (r < 2) throw InvalidArgument("normal tensors: order must be >= 2");
  if (n > 255) throw CapExceeded("normal tensors: n too large");
  ambient_ = symmetric_power_dimension(n, 2) * symmetric_power_dimension(n, r);

  std::vector<Key> contents;
  Key scratch;
  multisets(n, r + 2, 0, scratch, contents);
  for (const auto& content : contents) {
    std::map<Key, std::size_t> column_index;
    Block block;
    for (std::size_t i = 0; i < content.size(); ++i)
      for (std::size_t j = i + 1; j < content.size(); ++j) {
        auto key = split(content, i, j);
        if (column_index.emplace(key, block.columns.size()).second)
          block.columns.push_back(std::move(key));
      }
    // one row per distinct value a' of the content: the component
    // (a'; K) of the symmetrization, K = content minus a'
    Matrix s;
    for (std::size_t i = 0; i < content.size(); ++i) {
      if (i > 0 && content[i] == content[i - 1]) continue;
      Vector row(block.columns.size(), Rational(0));
      for (std::size_t t = 0; t < content.size(); ++t)
        if (t != i) row[column_index.at(split(content, std::min(i, t), std::max(i, t)))] += 1;
      s.append_row(row);
    }
    const std::size_t block_rank = rank(s);
    rank_ += block_rank;
    for (auto& v : nullspace(s))
      block.kernel.push_back(primitive_integer_vector(std::move(v)));
    dimension_ += block.kernel.size();
    if (!block.kernel.empty()) blocks_.push_back(std::move(block));
  }
}

Tensor NormalTensorSpace::expand(const std::vector<Vector>& block_values) const {
  auto t = Tensor::covariant(n_, r_ + 2);
  std::vector<std::size_t> index(r_ + 2);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& block = blocks_[b];
    for (std::size_t c = 0; c < block.columns.size(); ++c) {
      const auto& value = block_values[b][c];
      if (is_zero(value)) continue;
      const auto& key = block.columns[c];
      Key rest(key.begin() + 2, key.end());
      do {
        for (std::size_t t = 0; t < r_; ++t) index[2 + t] = rest[t];
        index[0] = key[0];
        index[1] = key[1];
        t[index] = value;
        index[0] = key[1];
        index[1] = key[0];
        t[index] = value;
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return t;
}

std::vector<Tensor> NormalTensorSpace::basis() const {
  std::vector<Tensor> out;
  std::vector<Vector> values(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    values[b].assign(blocks_[b].columns.size(), Rational(0));
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (const auto& v : blocks_[b].kernel) {
      values[b] = v;
      out.push_back(expand(values));
      values[b].assign(v.size(), Rational(0));
    }
  return out;
}

Tensor NormalTensorSpace::combination(
    std::span<const Rational> coefficients) const {
  if (coefficients.size() != dimension_)
    throw InvalidArgument("normal tensors: wrong number of coefficients");
  std::vector<Vector> values(blocks_.size());
  std::size_t next = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    values[b].assign(blocks_[b].columns.size(), Rational(0));
    for (const auto& v : blocks_[b].kernel) {
      const auto& c = coefficients[next++];
      if (is_zero(c)) continue;
      for (std::size_t i = 0; i < v.size(); ++i) values[b][i] += c * v[i];
    }
  }
  return expand(values);
}

NormalTensorSample NormalTensorSpace::sample(RationalSource& source,
                                             long bound) const {
  Vector coefficients;
  coefficients.reserve(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i)
    coefficients.push_back(source.next(bound, 1));
  return {r_, n_, combination(coefficients)};
}

std::vector<Tensor> normal_tensor_basis(std::size_t n, std::size_t r) {
  return NormalTensorSpace(n, r).basis();
}

NormalTensorSample random_normal_tensor(std::size_t n, std::size_t r,
                                        std::uint64_t seed) {
  RationalSource source(seed);
  return NormalTensorSpace(n, r).sample(source);
}

bool is_normal_tensor(const Tensor& t, std::size_t r) {
  if (t.rank() != r + 2 || r < 2) return false;
  for (const auto v : t.slots())
    if (v != Variance::covariant) return false;
  const auto swapped = [&](std::size_t a, std::size_t b) {
    return permute_slots(t, Permutation::transposition(t.rank(), a, b));
  };
  if (swapped(0, 1) != t) return false;
  // adjacent transpositions generate the symmetric group on the last r slots
  for (std::size_t s = 2; s + 1 < t.rank(); ++s)
    if (swapped(s, s + 1) != t) return false;
  std::vector<std::size_t> tail(r + 1);
  for (std::size_t s = 0; s <= r; ++s) tail[s] = s + 1;
  return symmetrize(t, std::span<const std::size_t>(tail)).is_zero();
}

}  // namespace curvident
