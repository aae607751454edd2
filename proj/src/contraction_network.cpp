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

#include "curvident/contraction_network.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace curvident {
namespace {

bool all_ones(std::span<const Rational> w) {
  return std::all_of(w.begin(), w.end(),
                     [](const Rational& x) { return x == 1; });
}

// Row-major strides of a tensor with `rank` slots in dimension n.
std::vector<std::size_t> strides_for(std::size_t rank, std::size_t n) {
  std::vector<std::size_t> s(rank, 1);
  for (std::size_t pos = rank; pos-- > 1;) s[pos - 1] = s[pos] * n;
  return s;
}

// Removes labels repeated inside one factor by tracing them.
LabeledTensor self_trace(LabeledTensor f, std::span<const Rational> weights) {
  for (;;) {
    std::size_t a = 0, b = 0;
    bool found = false;
    for (std::size_t i = 0; i < f.labels.size() && !found; ++i)
      for (std::size_t j = i + 1; j < f.labels.size(); ++j)
        if (f.labels[i] == f.labels[j]) {
          a = i;
          b = j;
          found = true;
          break;
        }
    if (!found) return f;
    const std::size_t n = f.tensor.dim();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) w[i][i] = weights[i];
    f.tensor = detail::weighted_trace(f.tensor, a, b, w);
    f.labels.erase(f.labels.begin() + static_cast<long>(b));
    f.labels.erase(f.labels.begin() + static_cast<long>(a));
  }
}

LabeledTensor contract_pair(const LabeledTensor& a, const LabeledTensor& b,
                            std::span<const Rational> weights,
                            bool unit_weights) {
  const std::size_t n = a.tensor.dim();
  std::vector<int> shared;
  std::vector<int> kept;
  for (const int l : a.labels) {
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end())
      shared.push_back(l);
    else
      kept.push_back(l);
  }
  for (const int l : b.labels)
    if (std::find(shared.begin(), shared.end(), l) == shared.end())
      kept.push_back(l);

  const auto sa = strides_for(a.labels.size(), n);
  const auto sb = strides_for(b.labels.size(), n);
  auto position = [](const std::vector<int>& labels, int l) {
    return static_cast<std::size_t>(
        std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  // Stride contributions of each kept/shared label to a and b.
  auto stride_in = [&](const LabeledTensor& t, const std::vector<std::size_t>& s,
                       int l) -> std::size_t {
    const auto p = position(t.labels, l);
    return p < t.labels.size() ? s[p] : 0;
  };
  std::vector<std::size_t> kept_a, kept_b, shared_a, shared_b;
  for (const int l : kept) {
    kept_a.push_back(stride_in(a, sa, l));
    kept_b.push_back(stride_in(b, sb, l));
  }
  for (const int l : shared) {
    shared_a.push_back(stride_in(a, sa, l));
    shared_b.push_back(stride_in(b, sb, l));
  }

  LabeledTensor out{Tensor::covariant(n, kept.size()), kept};
  std::vector<std::size_t> ki(kept.size(), 0);
  std::vector<std::size_t> si(shared.size(), 0);
  std::size_t flat = 0;
  Rational term;
  do {
    std::size_t base_a = 0, base_b = 0;
    for (std::size_t q = 0; q < kept.size(); ++q) {
      base_a += ki[q] * kept_a[q];
      base_b += ki[q] * kept_b[q];
    }
    Rational sum(0);
    std::fill(si.begin(), si.end(), 0);
    do {
      std::size_t ia = base_a, ib = base_b;
      for (std::size_t q = 0; q < shared.size(); ++q) {
        ia += si[q] * shared_a[q];
        ib += si[q] * shared_b[q];
      }
      const auto& x = a.tensor.flat(ia);
      if (is_zero(x)) continue;
      const auto& y = b.tensor.flat(ib);
      if (is_zero(y)) continue;
      term = x * y;
      if (!unit_weights)
        for (const auto v : si) term *= weights[v];
      sum += term;
    } while (next_multi_index(si, n));
    out.tensor.flat(flat++) = std::move(sum);
  } while (next_multi_index(ki, n));
  return out;
}

}  // namespace

Tensor contract_network(std::vector<LabeledTensor> factors,
                        std::span<const int> output_labels,
                        std::span<const Rational> pairing_weights) {
  if (factors.empty()) throw InvalidArgument("contract_network: no factors");
  const std::size_t n = factors.front().tensor.dim();
  if (pairing_weights.size() != n)
    throw InvalidArgument("contract_network: one weight per dimension");
  std::map<int, int> occurrences;
  for (auto& f : factors) {
    if (f.tensor.dim() != n)
      throw InvalidArgument("contract_network: dimension mismatch");
    if (f.labels.size() != f.tensor.rank())
      throw InvalidArgument("contract_network: one label per slot");
    for (const int l : f.labels) ++occurrences[l];
  }
  for (const int l : output_labels) ++occurrences[l];
  for (const auto& [label, count] : occurrences)
    if (count != 2)
      throw InvalidArgument("contract_network: label " + std::to_string(label) +
                            " must occur exactly twice");

  const bool unit = all_ones(pairing_weights);
  for (auto& f : factors) f = self_trace(std::move(f), pairing_weights);

  while (factors.size() > 1) {
    std::size_t best_i = 0, best_j = 1;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        std::size_t shared = 0;
        for (const int l : factors[i].labels)
          shared += static_cast<std::size_t>(std::count(
              factors[j].labels.begin(), factors[j].labels.end(), l));
        const std::size_t unique =
            factors[i].labels.size() + factors[j].labels.size() - shared;
        // prefer connected pairs; an outer product only when forced
        const std::size_t cost = unique + (shared == 0 ? 64 : 0);
        if (cost < best_cost) {
          best_cost = cost;
          best_i = i;
          best_j = j;
        }
      }
    auto merged = contract_pair(factors[best_i], factors[best_j],
                                pairing_weights, unit);
    factors.erase(factors.begin() + static_cast<long>(best_j));
    factors[best_i] = std::move(merged);
  }

  auto& last = factors.front();
  // Reorder slots to match output_labels.
  std::vector<std::size_t> image(output_labels.size());
  for (std::size_t q = 0; q < output_labels.size(); ++q) {
    const auto it =
        std::find(output_labels.begin(), output_labels.end(), last.labels[q]);
    image[q] = static_cast<std::size_t>(it - output_labels.begin());
  }
  // out[i] = last[i_{s(0)}, ...] where slot b of `last` holds output slot s(b)
  return permute_slots(last.tensor, Permutation(std::move(image)));
}

}  // namespace curvident
