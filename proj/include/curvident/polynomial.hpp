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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "curvident/rational.hpp"

namespace curvident {

// Exponent of each variable in a monomial.
using Exponents = std::vector<std::uint8_t>;

std::size_t total_degree(const Exponents& e);

// All exponent vectors of total degree d, lexicographically descending
// (x0^d first).
std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::size_t d);

// Polynomial in `nvars` variables known only up to total degree `degree`
// (a Taylor jet at the origin). Terms above the truncation order are
// dropped by every operation; products and derivatives lower the order to
// what is still exact.
class TruncatedPolynomial {
 public:
  TruncatedPolynomial(std::size_t nvars, std::size_t degree);

  static TruncatedPolynomial constant(std::size_t nvars, std::size_t degree,
                                      const Rational& c);
  static TruncatedPolynomial variable(std::size_t nvars, std::size_t degree,
                                      std::size_t var);

  std::size_t nvars() const { return nvars_; }
  std::size_t degree() const { return degree_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coefficient(const Exponents& e) const;
  // Throws InvalidArgument if e has the wrong length or exceeds the order.
  void set_coefficient(const Exponents& e, const Rational& c);
  void add_to_coefficient(const Exponents& e, const Rational& c);
  Rational constant_term() const;
  bool is_zero() const { return terms_.empty(); }

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
  TruncatedPolynomial& operator*=(const Rational& factor);

  friend TruncatedPolynomial operator+(TruncatedPolynomial a,
                                       const TruncatedPolynomial& b) {
    return a += b;
  }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a,
                                       const TruncatedPolynomial& b) {
    return a -= b;
  }
  friend TruncatedPolynomial operator*(const Rational& f,
                                       TruncatedPolynomial a) {
    return a *= f;
  }
  friend TruncatedPolynomial operator*(const TruncatedPolynomial& a,
                                       const TruncatedPolynomial& b);

  // Valid to order degree() - 1 (order 0 stays 0).
  TruncatedPolynomial derivative(std::size_t var) const;
  TruncatedPolynomial truncated(std::size_t degree) const;
  // Same polynomial viewed in more variables (new ones do not appear).
  TruncatedPolynomial embedded(std::size_t nvars) const;
  // Substitutes x_i = sum_j m[i][j] y_j.
  TruncatedPolynomial substitute_linear(
      const std::vector<std::vector<Rational>>& m) const;

  std::string to_string() const;

  friend bool operator==(const TruncatedPolynomial& a,
                         const TruncatedPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ &&
           a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const TruncatedPolynomial& other) const;

  std::size_t nvars_;
  std::size_t degree_;
  std::map<Exponents, Rational> terms_;  // nonzero coefficients only
};

}  // namespace curvident
