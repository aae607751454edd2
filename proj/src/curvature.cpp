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

#include "curvident/curvature.hpp"

#include "curvident/errors.hpp"

namespace curvident {

Tensor riemann(const MetricJet& g) {
  if (g.degree() < 2)
    throw InsufficientDegree("curvature needs a metric jet of degree >= 2");
  const std::size_t n = g.dim();
  const auto gamma = christoffel(g);

  // value[i][j][k] = G^i_{jk}(0), slope[i][j][k][l] = d_l G^i_{jk}(0)
  std::vector<Rational> value(n * n * n);
  std::vector<Rational> slope(n * n * n * n);
  Exponents e(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& p = gamma.component(i, j, k);
        value[(i * n + j) * n + k] = p.constant_term();
        for (std::size_t l = 0; l < n; ++l) {
          e[l] = 1;
          slope[((i * n + j) * n + k) * n + l] = p.coefficient(e);
          e[l] = 0;
        }
      }
  const auto G = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
    return value[(i * n + j) * n + k];
  };
  const auto dG = [&](std::size_t i, std::size_t j, std::size_t k,
                      std::size_t l) -> const Rational& {
    return slope[((i * n + j) * n + k) * n + l];
  };

  // R^i_{jkl}, stored as a (1,3) tensor
  Tensor mixed(n, {Variance::contravariant, Variance::covariant,
                   Variance::covariant, Variance::covariant});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational r = dG(i, l, j, k) - dG(i, k, j, l);
          for (std::size_t m = 0; m < n; ++m)
            r += G(i, k, m) * G(m, l, j) - G(i, l, m) * G(m, k, j);
          mixed.at({i, j, k, l}) = std::move(r);
        }
  return lower_slot(mixed, 0, g.at_base());
}

Tensor ricci_from_riemann(const Tensor& riemann, const Tensor& metric) {
  return contract(riemann, 0, 2, metric);
}

Rational scalar_from_ricci(const Tensor& ricci, const Tensor& metric) {
  return contract(ricci, 0, 1, metric).flat(0);
}

Tensor ricci(const MetricJet& g) {
  return ricci_from_riemann(riemann(g), g.at_base());
}

Rational scalar_curvature(const MetricJet& g) {
  const auto base = g.at_base();
  return scalar_from_ricci(ricci_from_riemann(riemann(g), base), base);
}

Tensor einstein(const MetricJet& g) {
  const auto base = g.at_base();
  const auto ric = ricci_from_riemann(riemann(g), base);
  const Rational r = scalar_from_ricci(ric, base);
  return ric - (r / 2) * base;
}

}  // namespace curvident
