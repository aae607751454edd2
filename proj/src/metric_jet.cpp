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

#include "curvident/metric_jet.hpp"

#include <charconv>

#include "curvident/errors.hpp"

namespace curvident {

Signature Signature::lorentzian(std::size_t n) {
  if (n < 1) throw InvalidArgument("Lorentzian signature needs n >= 1");
  return {n - 1, 1};
}

std::vector<int> Signature::diagonal() const {
  std::vector<int> d(plus, 1);
  d.resize(plus + minus, -1);
  return d;
}

std::vector<Rational> Signature::diagonal_rational() const {
  std::vector<Rational> d;
  for (const int s : diagonal()) d.emplace_back(s);
  return d;
}

Tensor Signature::flat_metric() const {
  auto g = Tensor::covariant(dim(), 2);
  const auto d = diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) g.at({i, i}) = d[i];
  return g;
}

std::string Signature::to_string() const {
  return std::to_string(plus) + "," + std::to_string(minus);
}

Signature Signature::parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw InvalidArgument("signature must look like P,M");
  Signature s;
  const auto parse_count = [&](std::string_view part, std::size_t& out) {
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, out);
    if (ec != std::errc() || ptr != end || part.empty())
      throw InvalidArgument("malformed signature '" + text + "'");
  };
  const std::string_view view(text);
  parse_count(view.substr(0, comma), s.plus);
  parse_count(view.substr(comma + 1), s.minus);
  if (s.dim() == 0) throw InvalidArgument("signature of dimension 0");
  return s;
}

Signature inertia(const Tensor& symmetric) {
  const std::size_t n = symmetric.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = symmetric.at({i, j});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] != a[j][i]) throw InvalidArgument("matrix is not symmetric");
  Signature s;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a[p][p])) ++p;
    if (p == n) {
      // Zero diagonal: a_ij != 0 makes row/column i + j a usable pivot.
      std::size_t i = n, j = n;
      for (std::size_t r = k; r < n && i == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (!is_zero(a[r][c])) {
            i = r;
            j = c;
            break;
          }
      if (i == n) throw SingularMetric("metric at the base point is singular");
      for (std::size_t c = k; c < n; ++c) a[i][c] += a[j][c];
      for (std::size_t r = k; r < n; ++r) a[r][i] += a[r][j];
      p = i;
    }
    std::swap(a[p], a[k]);
    for (auto& row : a) std::swap(row[p], row[k]);
    const Rational pivot = a[k][k];
    (sgn(pivot) > 0 ? s.plus : s.minus) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (is_zero(a[r][k])) continue;
      const Rational f = a[r][k] / pivot;
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (std::size_t c = k + 1; c < n; ++c) a[k][c] = 0;
  }
  return s;
}

MetricJet::MetricJet(Signature signature, std::size_t degree)
    : signature_(signature), degree_(degree) {
  const std::size_t n = dim();
  if (n == 0) throw InvalidArgument("metric jet of dimension 0");
  const auto d = signature_.diagonal();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      components_.push_back(TruncatedPolynomial::constant(
          n, degree, a == b ? Rational(d[a]) : Rational(0)));
}

std::size_t MetricJet::slot(std::size_t a, std::size_t b) const {
  const std::size_t n = dim();
  if (a >= n || b >= n) throw InvalidArgument("metric index out of range");
  if (a > b) std::swap(a, b);
  return a * n - a * (a - 1) / 2 + (b - a);
}

const TruncatedPolynomial& MetricJet::component(std::size_t a,
                                                std::size_t b) const {
  return components_[slot(a, b)];
}

void MetricJet::set_component(std::size_t a, std::size_t b,
                              TruncatedPolynomial p) {
  if (p.nvars() != dim()) throw InvalidArgument("component nvars != dim");
  TruncatedPolynomial q(dim(), degree_);
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) <= degree_) q.set_coefficient(e, c);
  components_[slot(a, b)] = std::move(q);
}

void MetricJet::validate() const {
  if (!(inertia(at_base()) == signature_))
    throw InvalidArgument("g(0) does not have signature " +
                          signature_.to_string());
}

Tensor MetricJet::at_base() const {
  auto g = Tensor::covariant(dim(), 2);
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      g.at({a, b}) = component(a, b).constant_term();
  return g;
}

MetricJet random_metric_jet(std::size_t n, Signature signature,
                            std::size_t degree, std::uint64_t seed,
                            RandomJetOptions options) {
  if (degree < 2) throw InvalidArgument("random jets need degree >= 2");
  if (n == 0 || signature.dim() != n)
    throw InvalidArgument("signature " + signature.to_string() +
                          " does not match dimension " + std::to_string(n));
  if (options.denominator <= 0)
    throw InvalidArgument("denominator must be positive");
  MetricJet g(signature, degree);
  RationalSource source(seed);
  std::vector<Exponents> monomials;
  for (std::size_t d = 1; d <= degree; ++d) {
    const auto layer = monomials_of_degree(n, d);
    monomials.insert(monomials.end(), layer.begin(), layer.end());
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto p = g.component(a, b);
      for (const auto& e : monomials)
        p.set_coefficient(e, source.next(options.numerator_bound,
                                         options.denominator));
      g.set_component(a, b, std::move(p));
    }
  return g;
}

InverseMetricJet::InverseMetricJet(std::size_t dim, std::size_t degree)
    : dim_(dim),
      degree_(degree),
      entries_(dim * dim, TruncatedPolynomial(dim, degree)) {}

InverseMetricJet inverse_metric_jet(const MetricJet& g) {
  const std::size_t n = g.dim();
  const std::size_t d = g.degree();
  const auto base_inverse = invert_metric(g.at_base());

  // a = -g(0)^{-1} (g - g(0)), which has no constant term.
  std::vector<TruncatedPolynomial> a(n * n, TruncatedPolynomial(n, d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TruncatedPolynomial sum(n, d);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c = base_inverse.at({i, k});
        if (is_zero(c)) continue;
        auto h = g.component(k, j);
        h.set_coefficient(Exponents(n, 0), 0);
        sum += (-c) * h;
      }
      a[i * n + j] = std::move(sum);
    }

  // inverse = sum_{p=0}^{d} a^p g(0)^{-1}
  InverseMetricJet out(n, d);
  std::vector<TruncatedPolynomial> term(n * n, TruncatedPolynomial(n, d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      term[i * n + j] =
          TruncatedPolynomial::constant(n, d, base_inverse.at({i, j}));
  for (std::size_t power = 0;; ++power) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.component(i, j) += term[i * n + j];
    if (power == d) break;
    std::vector<TruncatedPolynomial> next(n * n, TruncatedPolynomial(n, d));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (a[i * n + k].is_zero() || term[k * n + j].is_zero()) continue;
          next[i * n + j] += a[i * n + k] * term[k * n + j];
        }
    term = std::move(next);
  }
  return out;
}

ChristoffelJet::ChristoffelJet(std::size_t dim, std::size_t degree)
    : dim_(dim),
      degree_(degree),
      entries_(dim * dim * dim, TruncatedPolynomial(dim, degree)) {}

std::size_t ChristoffelJet::index(std::size_t i, std::size_t j,
                                  std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw InvalidArgument("Christoffel index out of range");
  if (j > k) std::swap(j, k);
  return (i * dim_ + j) * dim_ + k;
}

const TruncatedPolynomial& ChristoffelJet::component(std::size_t i,
                                                     std::size_t j,
                                                     std::size_t k) const {
  return entries_[index(i, j, k)];
}

void ChristoffelJet::set_component(std::size_t i, std::size_t j, std::size_t k,
                                   TruncatedPolynomial p) {
  entries_[index(i, j, k)] = std::move(p);
}

ChristoffelJet christoffel(const MetricJet& g) {
  if (g.degree() < 1)
    throw InsufficientDegree("Christoffel symbols need a jet of degree >= 1");
  const std::size_t n = g.dim();
  const std::size_t d = g.degree() - 1;
  const auto inverse = inverse_metric_jet(g);
  // dg[c][a][b] = d_c g_ab
  std::vector<std::vector<std::vector<TruncatedPolynomial>>> dg(
      n, std::vector<std::vector<TruncatedPolynomial>>(
             n, std::vector<TruncatedPolynomial>(n, TruncatedPolynomial(n, d))));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        dg[c][a][b] = g.component(a, b).derivative(c);
        dg[c][b][a] = dg[c][a][b];
      }
  ChristoffelJet out(n, d);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        TruncatedPolynomial sum(n, d);
        for (std::size_t l = 0; l < n; ++l) {
          auto bracket = dg[j][l][k] + dg[k][l][j] - dg[l][j][k];
          if (bracket.is_zero()) continue;
          sum += inverse.component(i, l).truncated(d) * bracket;
        }
        out.set_component(i, j, k, half * sum);
      }
  return out;
}

MetricJet change_coordinates(const MetricJet& g,
                             const std::vector<std::vector<Rational>>& p) {
  const std::size_t n = g.dim();
  if (p.size() != n) throw InvalidArgument("coordinate change: wrong size");
  auto as_tensor = Tensor::covariant(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i].size() != n) throw InvalidArgument("coordinate change: not square");
    for (std::size_t j = 0; j < n; ++j) as_tensor.at({i, j}) = p[i][j];
  }
  (void)invert_metric(as_tensor);  // throws if P is singular

  std::vector<TruncatedPolynomial> substituted;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      substituted.push_back(g.component(c, d).substitute_linear(p));

  // Signature is preserved by congruence; validate() re-checks it.
  MetricJet out(g.signature(), g.degree());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      TruncatedPolynomial sum(n, g.degree());
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Rational f = p[c][a] * p[d][b];
          if (!is_zero(f)) sum += f * substituted[c * n + d];
        }
      out.set_component(a, b, std::move(sum));
    }
  out.validate();
  return out;
}

Tensor pull_back(const Tensor& t, const std::vector<std::vector<Rational>>& p) {
  const std::size_t n = t.dim();
  auto transpose = Tensor::covariant(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) transpose.at({i, j}) = p[j][i];
  Tensor out = t;
  for (std::size_t s = 0; s < t.rank(); ++s) {
    if (t.variance(s) != Variance::covariant)
      throw InvalidArgument("pull_back: covariant tensors only");
    out = transform_slot(out, s, transpose, Variance::covariant);
  }
  return out;
}

MetricJet cylinder_extend(const MetricJet& g) {
  const std::size_t n = g.dim() + 1;
  MetricJet out(Signature{g.signature().plus + 1, g.signature().minus},
                g.degree());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (b == n - 1) {
        out.set_component(a, b, TruncatedPolynomial::constant(
                                    n, g.degree(), a == b ? 1 : 0));
      } else {
        out.set_component(a, b, g.component(a, b).embedded(n));
      }
    }
  out.validate();
  return out;
}

Tensor restrict_to_base(const Tensor& t) {
  if (t.dim() < 2) throw InvalidArgument("restrict: dimension must be >= 2");
  for (const auto v : t.slots())
    if (v != Variance::covariant)
      throw InvalidArgument("restrict: contravariant slot present");
  const std::size_t m = t.dim() - 1;
  Tensor out(m, t.slots());
  std::vector<std::size_t> index(t.rank(), 0);
  std::size_t flat = 0;
  do {
    out.flat(flat++) = t[index];
  } while (next_multi_index(index, m));
  return out;
}

MetricJet rescale(const MetricJet& g, const Rational& factor) {
  if (sgn(factor) <= 0) throw InvalidArgument("rescale: factor must be > 0");
  MetricJet out = g;
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b)
      out.set_component(a, b, factor * g.component(a, b));
  return out;
}

}  // namespace curvident
