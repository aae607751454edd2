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

#include "curvident/rational.hpp"

#include <cstdlib>

#include "curvident/errors.hpp"

namespace curvident {

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return make_rational(text, "1");
  return make_rational(text.substr(0, slash), text.substr(slash + 1));
}

Rational make_rational(const std::string& numerator,
                       const std::string& denominator) {
  Integer num;
  Integer den;
  if (num.set_str(numerator, 10) != 0)
    throw InvalidArgument("malformed numerator '" + numerator + "'");
  if (den.set_str(denominator, 10) != 0)
    throw InvalidArgument("malformed denominator '" + denominator + "'");
  if (sgn(den) == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw InvalidArgument("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result(1);
  Rational factor = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1u) result *= factor;
    factor *= factor;
  }
  return result;
}

RationalSource::RationalSource(std::uint64_t seed)
    : state_(seed ^ 0x6a09e667f3bcc909ULL) {}

// splitmix64
std::uint64_t RationalSource::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long RationalSource::next_int(long bound) {
  if (bound <= 0) return 0;
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long>(next_u64() % span) - bound;
}

Rational RationalSource::next(long numerator_bound, long denominator) {
  Rational q(next_int(numerator_bound), denominator);
  q.canonicalize();
  return q;
}

}  // namespace curvident
