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

#include "curvident/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "curvident/errors.hpp"

namespace curvident {

std::size_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

namespace {

void fill_monomials(std::size_t var, std::size_t remaining, Exponents& e,
                    std::vector<Exponents>& out) {
  if (var + 1 == e.size()) {
    e[var] = static_cast<std::uint8_t>(remaining);
    out.push_back(e);
    return;
  }
  for (std::size_t k = remaining + 1; k-- > 0;) {
    e[var] = static_cast<std::uint8_t>(k);
    fill_monomials(var + 1, remaining - k, e, out);
  }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::size_t d) {
  std::vector<Exponents> out;
  if (nvars == 0) return out;
  Exponents e(nvars, 0);
  fill_monomials(0, d, e, out);
  return out;
}

TruncatedPolynomial::TruncatedPolynomial(std::size_t nvars, std::size_t degree)
    : nvars_(nvars), degree_(degree) {}

TruncatedPolynomial TruncatedPolynomial::constant(std::size_t nvars,
                                                  std::size_t degree,
                                                  const Rational& c) {
  TruncatedPolynomial p(nvars, degree);
  p.set_coefficient(Exponents(nvars, 0), c);
  return p;
}

TruncatedPolynomial TruncatedPolynomial::variable(std::size_t nvars,
                                                  std::size_t degree,
                                                  std::size_t var) {
  if (var >= nvars) throw InvalidArgument("variable index out of range");
  TruncatedPolynomial p(nvars, degree);
  if (degree >= 1) {
    Exponents e(nvars, 0);
    e[var] = 1;
    p.set_coefficient(e, 1);
  }
  return p;
}

Rational TruncatedPolynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedPolynomial::set_coefficient(const Exponents& e,
                                          const Rational& c) {
  if (e.size() != nvars_) throw InvalidArgument("exponent length != nvars");
  if (total_degree(e) > degree_)
    throw InvalidArgument("monomial exceeds truncation order");
  if (curvident::is_zero(c))
    terms_.erase(e);
  else
    terms_[e] = c;
}

void TruncatedPolynomial::add_to_coefficient(const Exponents& e,
                                             const Rational& c) {
  if (curvident::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (curvident::is_zero(it->second)) terms_.erase(it);
  }
}

Rational TruncatedPolynomial::constant_term() const {
  return coefficient(Exponents(nvars_, 0));
}

void TruncatedPolynomial::require_compatible(
    const TruncatedPolynomial& other) const {
  if (nvars_ != other.nvars_)
    throw InvalidArgument("polynomials in different numbers of variables");
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(
    const TruncatedPolynomial& other) {
  require_compatible(other);
  if (other.degree_ < degree_) *this = truncated(other.degree_);
  for (const auto& [e, c] : other.terms_)
    if (total_degree(e) <= degree_) add_to_coefficient(e, c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(
    const TruncatedPolynomial& other) {
  require_compatible(other);
  if (other.degree_ < degree_) *this = truncated(other.degree_);
  for (const auto& [e, c] : other.terms_)
    if (total_degree(e) <= degree_) add_to_coefficient(e, -c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const Rational& factor) {
  if (curvident::is_zero(factor)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a,
                              const TruncatedPolynomial& b) {
  a.require_compatible(b);
  TruncatedPolynomial out(a.nvars_, std::min(a.degree_, b.degree_));
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    const auto da = total_degree(ea);
    if (da > out.degree_) continue;
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > out.degree_) continue;
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_to_coefficient(e, ca * cb);
    }
  }
  return out;
}

TruncatedPolynomial TruncatedPolynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw InvalidArgument("variable index out of range");
  TruncatedPolynomial out(nvars_, degree_ == 0 ? 0 : degree_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_to_coefficient(d, c * Rational(e[var]));
  }
  return out;
}

TruncatedPolynomial TruncatedPolynomial::truncated(std::size_t degree) const {
  TruncatedPolynomial out(nvars_, std::min(degree, degree_));
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= out.degree_) out.terms_.emplace(e, c);
  return out;
}

TruncatedPolynomial TruncatedPolynomial::embedded(std::size_t nvars) const {
  if (nvars < nvars_) throw InvalidArgument("cannot embed into fewer vars");
  TruncatedPolynomial out(nvars, degree_);
  for (const auto& [e, c] : terms_) {
    Exponents wide = e;
    wide.resize(nvars, 0);
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

TruncatedPolynomial TruncatedPolynomial::substitute_linear(
    const std::vector<std::vector<Rational>>& m) const {
  if (m.size() != nvars_) throw InvalidArgument("substitution: wrong rows");
  std::vector<TruncatedPolynomial> images;
  for (const auto& row : m) {
    if (row.size() != nvars_) throw InvalidArgument("substitution: not square");
    TruncatedPolynomial form(nvars_, degree_);
    for (std::size_t j = 0; j < nvars_; ++j)
      if (!curvident::is_zero(row[j]))
        form += row[j] * variable(nvars_, degree_, j);
    images.push_back(std::move(form));
  }
  TruncatedPolynomial out(nvars_, degree_);
  for (const auto& [e, c] : terms_) {
    auto term = constant(nvars_, degree_, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint8_t k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

std::string TruncatedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*x" + std::to_string(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

}  // namespace curvident
