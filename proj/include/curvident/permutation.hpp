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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace curvident {

// A bijection of {0, ..., m-1}. Composition follows the usual function
// convention: compose(s, t)(i) == s(t(i)).
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless `image` is a bijection.
  explicit Permutation(std::vector<std::size_t> image);
  Permutation(std::initializer_list<std::size_t> image);

  static Permutation identity(std::size_t m);
  static Permutation transposition(std::size_t m, std::size_t a, std::size_t b);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  std::span<const std::size_t> image() const { return image_; }

  Permutation inverse() const;
  // +1 or -1.
  int sign() const;
  bool is_identity() const;

  // Steps to the lexicographically next permutation; returns false after the
  // last one (and leaves the permutation at the identity).
  bool next();

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

Permutation compose(const Permutation& outer, const Permutation& inner);

// All m! permutations in lexicographic order of their images.
std::vector<Permutation> all_permutations(std::size_t m);

}  // namespace curvident
