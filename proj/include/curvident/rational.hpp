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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace curvident {

// Exact scalar. Always kept in canonical (lowest-terms, positive
// denominator) form.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Parses "p" or "p/q" and canonicalizes. Throws InvalidArgument on junk or a
// zero denominator.
Rational parse_rational(const std::string& text);

// Builds num/den from decimal strings.
Rational make_rational(const std::string& numerator,
                       const std::string& denominator);

// base^exponent for any sign of exponent; base must be nonzero when the
// exponent is negative.
Rational pow(const Rational& base, int exponent);

// Small deterministic rational in [-bound, bound] / denominator drawn from a
// 64-bit generator state (splitmix64, no std distributions).
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform integer in [-bound, bound].
  long next_int(long bound);
  Rational next(long numerator_bound, long denominator);

 private:
  std::uint64_t state_;
};

}  // namespace curvident
