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

#include "curvident/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "curvident/errors.hpp"

namespace curvident {

Permutation::Permutation(std::vector<std::size_t> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (const auto v : image_) {
    if (v >= image_.size() || seen[v])
      throw InvalidArgument("permutation image is not a bijection");
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<std::size_t> image)
    : Permutation(std::vector<std::size_t>(image)) {}

Permutation Permutation::identity(std::size_t m) {
  std::vector<std::size_t> image(m);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(std::size_t m, std::size_t a,
                                       std::size_t b) {
  if (a >= m || b >= m) throw InvalidArgument("transposition out of range");
  auto p = identity(m);
  std::swap(p.image_[a], p.image_[b]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

int Permutation::sign() const {
  std::vector<bool> visited(image_.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (auto i = start; !visited[i]; i = image_[i]) {
      visited[i] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

bool Permutation::next() {
  return std::next_permutation(image_.begin(), image_.end());
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  return out + "]";
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size())
    throw InvalidArgument("composing permutations of different sizes");
  std::vector<std::size_t> image(inner.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = outer(inner(i));
  return Permutation(std::move(image));
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<Permutation> out;
  auto p = Permutation::identity(m);
  do {
    out.push_back(p);
  } while (p.next());
  return out;
}

}  // namespace curvident
