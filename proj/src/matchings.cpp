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

#include "curvident/matchings.hpp"

#include <algorithm>

#include "curvident/errors.hpp"

namespace curvident {

Matching::Matching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  const std::size_t m = 2 * pairs_.size();
  partner_.assign(m, m);
  for (auto& [a, b] : pairs_) {
    if (a > b) std::swap(a, b);
    if (b >= m || a == b || partner_[a] != m || partner_[b] != m)
      throw InvalidArgument("not a perfect matching");
    partner_[a] = b;
    partner_[b] = a;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

Matching Matching::relabeled(std::span<const std::size_t> image) const {
  if (image.size() != size())
    throw InvalidArgument("relabeling has the wrong size");
  std::vector<Pair> out;
  out.reserve(pairs_.size());
  for (const auto& [a, b] : pairs_) out.emplace_back(image[a], image[b]);
  return Matching(std::move(out));
}

std::string Matching::to_string() const {
  std::string out;
  for (const auto& [a, b] : pairs_)
    out += "(" + std::to_string(a) + " " + std::to_string(b) + ")";
  return out.empty() ? "()" : out;
}

namespace {

void extend(std::vector<bool>& used, std::vector<Matching::Pair>& current,
            std::vector<Matching>& out) {
  const auto first = std::find(used.begin(), used.end(), false);
  if (first == used.end()) {
    out.emplace_back(current);
    return;
  }
  const auto a = static_cast<std::size_t>(first - used.begin());
  used[a] = true;
  for (std::size_t b = a + 1; b < used.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    current.emplace_back(a, b);
    extend(used, current, out);
    current.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

}  // namespace

std::vector<Matching> enumerate_matchings(std::size_t m) {
  if (m % 2 != 0) throw InvalidArgument("matchings need an even slot count");
  if (m > kMaxMatchingSlots)
    throw CapExceeded("at most " + std::to_string(kMaxMatchingSlots) +
                      " slots, got " + std::to_string(m));
  std::vector<bool> used(m, false);
  std::vector<Matching::Pair> current;
  std::vector<Matching> out;
  extend(used, current, out);
  return out;
}

std::size_t union_cycles(const Matching& a, const Matching& b) {
  if (a.size() != b.size()) throw InvalidArgument("matchings differ in size");
  std::vector<bool> seen(a.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < a.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    // alternate a-edges and b-edges until the walk closes
    std::size_t v = start;
    do {
      seen[v] = true;
      const std::size_t w = a.partner(v);
      seen[w] = true;
      v = b.partner(w);
    } while (v != start);
  }
  return cycles;
}

Matrix gram_matrix(std::size_t m, std::size_t n) {
  if (n == 0) throw InvalidArgument("dimension must be >= 1");
  const auto all = enumerate_matchings(m);
  Matrix gram(all.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), n, union_cycles(all[i], all[j]));
      gram(i, j) = gram(j, i) = Rational(power);
    }
  return gram;
}

std::size_t dim_invariants(std::size_t m, std::size_t n) {
  return rank(gram_matrix(m, n));
}

ReductionReport reduction_check(std::size_t m, std::size_t n_max) {
  if (n_max == 0) throw InvalidArgument("n_max must be >= 1");
  ReductionReport report;
  report.m = m;
  for (std::size_t n = 1; n <= n_max; ++n)
    report.dims.push_back(dim_invariants(m, n));
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto now = report.dims[n - 1], before = report.dims[n - 2];
    if (now < before) report.decreases.push_back(n);
    if (n + 1 > m && now != before) report.unstable.push_back(n);
  }
  report.stable_from = n_max;
  while (report.stable_from > 1 &&
         report.dims[report.stable_from - 2] == report.dims.back())
    --report.stable_from;
  return report;
}

}  // namespace curvident
