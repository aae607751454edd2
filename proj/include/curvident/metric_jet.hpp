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
#include <string>
#include <vector>

#include "curvident/polynomial.hpp"
#include "curvident/tensor.hpp"

namespace curvident {

// (n+, n-). The canonical diagonal form lists the n+ plus signs first.
struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;

  std::size_t dim() const { return plus + minus; }
  static Signature riemannian(std::size_t n) { return {n, 0}; }
  // (n-1, 1)
  static Signature lorentzian(std::size_t n);

  // +1 repeated plus times, then -1 repeated minus times.
  std::vector<int> diagonal() const;
  std::vector<Rational> diagonal_rational() const;
  // Constant metric diag(+1.., -1..) as a covariant 2-slot tensor.
  Tensor flat_metric() const;

  // "P,M"
  std::string to_string() const;
  static Signature parse(const std::string& text);

  friend bool operator==(const Signature&, const Signature&) = default;
};

// (positive, negative) counts of a nonsingular symmetric matrix, computed by
// symmetric elimination. Throws SingularMetric for a singular matrix.
Signature inertia(const Tensor& symmetric);

// Taylor jet of a metric at the origin of R^n: one truncated polynomial per
// unordered pair (a, b). The constant term is nonsingular with the declared
// signature; symmetry holds by storage.
class MetricJet {
 public:
  // Flat jet diag(+1.., -1..) truncated at `degree`.
  MetricJet(Signature signature, std::size_t degree);

  std::size_t dim() const { return signature_.dim(); }
  std::size_t degree() const { return degree_; }
  const Signature& signature() const { return signature_; }

  const TruncatedPolynomial& component(std::size_t a, std::size_t b) const;
  // Replaces g_ab (and g_ba). The result is validated by validate().
  void set_component(std::size_t a, std::size_t b, TruncatedPolynomial p);

  // Throws SingularMetric if g(0) is singular, InvalidArgument if its
  // inertia differs from the declared signature.
  void validate() const;

  // g(0) as a covariant 2-slot tensor.
  Tensor at_base() const;

  friend bool operator==(const MetricJet&, const MetricJet&) = default;

 private:
  std::size_t slot(std::size_t a, std::size_t b) const;

  Signature signature_;
  std::size_t degree_;
  std::vector<TruncatedPolynomial> components_;  // upper triangle, row-major
};

struct RandomJetOptions {
  long numerator_bound = 9;
  long denominator = 10;
};

// g(0) = diag(+1.., -1..); every nonconstant coefficient up to `degree` is
// an independent draw numerator/denominator with |numerator| <= bound.
// Throws InvalidArgument for degree < 2 or n != signature.dim().
MetricJet random_metric_jet(std::size_t n, Signature signature,
                            std::size_t degree, std::uint64_t seed,
                            RandomJetOptions options = {});

// Symmetric matrix of truncated polynomials.
class InverseMetricJet {
 public:
  InverseMetricJet(std::size_t dim, std::size_t degree);
  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const TruncatedPolynomial& component(std::size_t a, std::size_t b) const {
    return entries_[a * dim_ + b];
  }
  TruncatedPolynomial& component(std::size_t a, std::size_t b) {
    return entries_[a * dim_ + b];
  }

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::vector<TruncatedPolynomial> entries_;
};

// g^{-1} to the jet's truncation order, by the Neumann series around g(0).
InverseMetricJet inverse_metric_jet(const MetricJet& g);

// Levi-Civita symbols Gamma^i_{jk}, symmetric in (j, k), truncated at
// degree - 1.
class ChristoffelJet {
 public:
  ChristoffelJet(std::size_t dim, std::size_t degree);
  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const TruncatedPolynomial& component(std::size_t i, std::size_t j,
                                       std::size_t k) const;
  void set_component(std::size_t i, std::size_t j, std::size_t k,
                     TruncatedPolynomial p);

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_;
  std::size_t degree_;
  std::vector<TruncatedPolynomial> entries_;
};

ChristoffelJet christoffel(const MetricJet& g);

// x = P y; the pulled-back jet is P^T g(P y) P. P must be invertible.
MetricJet change_coordinates(const MetricJet& g,
                             const std::vector<std::vector<Rational>>& p);

// Pull-back of a covariant tensor at the base point under x = P y.
Tensor pull_back(const Tensor& t, const std::vector<std::vector<Rational>>& p);

// Product with the line: g + dt^2, the new coordinate last.
MetricJet cylinder_extend(const MetricJet& g);

// Keeps the components whose indices all avoid the last coordinate.
// Throws InvalidArgument for contravariant slots or dimension 1.
Tensor restrict_to_base(const Tensor& t);

// lambda^2 g. Throws InvalidArgument unless factor > 0.
MetricJet rescale(const MetricJet& g, const Rational& factor);

}  // namespace curvident
