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

#include <cstdint>
#include <vector>

#include "curvident/metric_jet.hpp"
#include "curvident/rational.hpp"
#include "curvident/tensor.hpp"

namespace curvident::testing {

inline Tensor random_tensor(std::size_t n, std::vector<Variance> slots,
                            std::uint64_t seed, long bound = 5) {
  Tensor t(n, std::move(slots));
  RationalSource source(seed);
  for (std::size_t i = 0; i < t.size(); ++i)
    t.flat(i) = source.next(bound, 3);
  return t;
}

inline Tensor random_covariant(std::size_t n, std::size_t rank,
                               std::uint64_t seed) {
  return random_tensor(n, std::vector<Variance>(rank, Variance::covariant),
                       seed);
}

// Random permutation matrix with random signs that maps the +1 block of
// diag(+1.., -1..) to itself, so it preserves the flat metric.
inline std::vector<std::vector<Rational>> signed_permutation(
    const Signature& sig, std::uint64_t seed) {
  RationalSource source(seed);
  const std::size_t n = sig.dim();
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  const auto shuffle = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = end; i > begin + 1; --i) {
      const auto j = begin + source.next_u64() % (i - begin);
      std::swap(image[i - 1], image[j]);
    }
  };
  shuffle(0, sig.plus);
  shuffle(sig.plus, n);
  std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    p[image[i]][i] = (source.next_u64() & 1) ? 1 : -1;
  return p;
}

// Coefficient of x^e in g_ab.
inline Rational jet_coefficient(const MetricJet& g, std::size_t a,
                                std::size_t b, std::vector<int> e) {
  Exponents ex(g.dim(), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    ex[i] = static_cast<std::uint8_t>(e[i]);
  return g.component(a, b).coefficient(ex);
}

// d_c g_ab at the origin.
inline Rational first_derivative(const MetricJet& g, std::size_t a,
                                 std::size_t b, std::size_t c) {
  std::vector<int> e(g.dim(), 0);
  e[c] = 1;
  return jet_coefficient(g, a, b, e);
}

// d_c d_d g_ab at the origin.
inline Rational second_derivative(const MetricJet& g, std::size_t a,
                                  std::size_t b, std::size_t c,
                                  std::size_t d) {
  std::vector<int> e(g.dim(), 0);
  ++e[c];
  ++e[d];
  return jet_coefficient(g, a, b, e) * (c == d ? 2 : 1);
}

// Textbook coordinate formula, written directly against the Taylor
// coefficients:
//   R_iklm = 1/2 (g_im,kl + g_kl,im - g_il,km - g_km,il)
//            + g_np (G^n_kl G^p_im - G^n_km G^p_il)
inline Tensor riemann_oracle(const MetricJet& g) {
  const std::size_t n = g.dim();
  const Tensor g0 = g.at_base();
  const Tensor ginv = invert_metric(g0);
  std::vector<Rational> gamma(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        Rational s = 0;
        for (std::size_t q = 0; q < n; ++q)
          s += ginv.at({i, q}) *
               (first_derivative(g, q, k, l) + first_derivative(g, q, l, k) -
                first_derivative(g, k, l, q));
        gamma[(i * n + k) * n + l] = s / 2;
      }
  const auto G = [&](std::size_t i, std::size_t k, std::size_t l) {
    return gamma[(i * n + k) * n + l];
  };
  auto r = Tensor::covariant(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          Rational v = (second_derivative(g, i, m, k, l) +
                        second_derivative(g, k, l, i, m) -
                        second_derivative(g, i, l, k, m) -
                        second_derivative(g, k, m, i, l)) /
                       2;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              v += g0.at({a, b}) *
                   (G(a, k, l) * G(b, i, m) - G(a, k, m) * G(b, i, l));
          r.at({i, k, l, m}) = v;
        }
  return r;
}

}  // namespace curvident::testing
