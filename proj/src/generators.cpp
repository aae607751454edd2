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

#include "curvident/generators.hpp"

#include <algorithm>
#include <map>

#include "curvident/contraction_network.hpp"
#include "curvident/errors.hpp"
#include "curvident/normal_tensors.hpp"

namespace curvident {

std::vector<SlotSignature::Factor> SlotSignature::factors() const {
  std::vector<Factor> out;
  std::size_t slot = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t copy = 0; copy < d[i]; ++copy) {
      out.push_back({i + 2, slot});
      slot += i + 4;
    }
  return out;
}

std::size_t SlotSignature::slot_count() const {
  std::size_t m = 2 * pbar;
  for (std::size_t i = 0; i < d.size(); ++i) m += d[i] * (i + 4);
  return m;
}

std::size_t SlotSignature::weight_sum() const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * (i + 2);
  return s;
}

std::string SlotSignature::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i)
    out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

namespace {

void fill_multi_indices(std::size_t pos, std::size_t remaining,
                        std::vector<std::size_t>& d,
                        std::vector<std::vector<std::size_t>>& out) {
  if (pos == d.size()) {
    if (remaining == 0) out.push_back(d);
    return;
  }
  const std::size_t j = pos + 2;
  for (std::size_t c = remaining / j + 1; c-- > 0;) {
    d[pos] = c;
    fill_multi_indices(pos + 1, remaining - c * j, d, out);
  }
  d[pos] = 0;
}

}  // namespace

std::vector<SlotSignature> admissible_signatures(std::size_t pbar,
                                                 std::size_t k) {
  if (k == 0 && pbar <= 1)
    throw ExceptionalCase("(pbar, k) = (" + std::to_string(pbar) +
                          ", 0) is an exceptional case");
  std::vector<std::size_t> d(k == 0 ? 0 : 2 * k - 1, 0);
  std::vector<std::vector<std::size_t>> all;
  fill_multi_indices(0, 2 * k, d, all);
  std::vector<SlotSignature> out;
  for (auto& x : all) out.push_back({pbar, std::move(x)});
  return out;
}

std::vector<std::vector<std::size_t>> slot_symmetries(const SlotSignature& s) {
  const std::size_t m = s.slot_count();
  std::vector<std::vector<std::size_t>> group(1, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) group[0][i] = i;

  const auto factors = s.factors();
  for (std::size_t j = 2; j <= s.max_order(); ++j) {
    std::vector<std::size_t> firsts;
    for (const auto& f : factors)
      if (f.order == j) firsts.push_back(f.first_slot);
    if (firsts.empty()) continue;

    // symmetries of a single factor, as offset maps on its j + 2 slots
    std::vector<std::vector<std::size_t>> local;
    for (const auto& tail : all_permutations(j))
      for (const bool swap : {false, true}) {
        std::vector<std::size_t> offsets(j + 2);
        offsets[0] = swap ? 1 : 0;
        offsets[1] = swap ? 0 : 1;
        for (std::size_t o = 0; o < j; ++o) offsets[2 + o] = 2 + tail(o);
        local.push_back(std::move(offsets));
      }

    std::vector<std::vector<std::size_t>> next;
    for (const auto& blocks : all_permutations(firsts.size())) {
      // one local symmetry per factor: odometer over local.size()^copies
      std::vector<std::size_t> choice(firsts.size(), 0);
      do {
        for (const auto& base : group) {
          auto image = base;
          for (std::size_t c = 0; c < firsts.size(); ++c)
            for (std::size_t o = 0; o < j + 2; ++o)
              image[firsts[c] + o] = firsts[blocks(c)] + local[choice[c]][o];
          next.push_back(std::move(image));
        }
      } while (next_multi_index(choice, local.size()));
    }
    group = std::move(next);
  }
  return group;
}

Matching canonical_key(const SlotSignature& s, const Matching& m) {
  if (m.size() != s.slot_count())
    throw InvalidArgument("canonical_key: matching has the wrong size");
  Matching best = m;
  for (const auto& image : slot_symmetries(s)) {
    auto candidate = m.relabeled(image);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::vector<GeneratorBlock> enumerate_generator_blocks(std::size_t pbar,
                                                       std::size_t k) {
  std::vector<GeneratorBlock> out;
  for (const auto& signature : admissible_signatures(pbar, k)) {
    const std::size_t m = signature.slot_count();
    if (m > kMaxMatchingSlots)
      throw CapExceeded("D = " + signature.to_string() + " needs " +
                        std::to_string(m) + " slots; cap is " +
                        std::to_string(kMaxMatchingSlots));
    const auto group = slot_symmetries(signature);
    GeneratorBlock block{signature, 0, {}};
    std::map<Matching, std::size_t> seen;
    for (const auto& matching : enumerate_matchings(m)) {
      ++block.matchings;
      Matching key = matching;
      for (const auto& image : group) {
        auto candidate = matching.relabeled(image);
        if (candidate < key) key = std::move(candidate);
      }
      if (seen.emplace(key, block.schemes.size()).second)
        block.schemes.push_back({signature, matching, std::move(key)});
    }
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<ContractionScheme> enumerate_generators(std::size_t pbar,
                                                    std::size_t k) {
  std::vector<ContractionScheme> out;
  for (auto& block : enumerate_generator_blocks(pbar, k))
    for (auto& scheme : block.schemes) out.push_back(std::move(scheme));
  return out;
}

Tensor evaluate_scheme(const ContractionScheme& scheme,
                       const NormalInputs& normals,
                       const Signature& signature) {
  const auto& s = scheme.signature;
  const std::size_t n = signature.dim();
  const std::size_t free = s.free_begin();
  constexpr int kOutput = 1 << 20;
  const auto label = [&](std::size_t slot) {
    const std::size_t other = scheme.matching.partner(slot);
    if (other >= free) return kOutput + static_cast<int>(other - free);
    return static_cast<int>(std::min(slot, other));
  };

  std::vector<LabeledTensor> factors;
  for (const auto& f : s.factors()) {
    if (f.order - 2 >= normals.size())
      throw InvalidArgument("evaluate_scheme: missing normal tensor of order " +
                            std::to_string(f.order));
    const Tensor& x = normals[f.order - 2];
    if (x.dim() != n || x.rank() != f.order + 2)
      throw InvalidArgument("evaluate_scheme: normal tensor has wrong shape");
    std::vector<int> labels;
    for (std::size_t o = 0; o < f.order + 2; ++o)
      labels.push_back(label(f.first_slot + o));
    factors.push_back({x, std::move(labels)});
  }
  for (const auto& [a, b] : scheme.matching.pairs())
    if (a >= free)
      factors.push_back({signature.flat_metric(),
                         {kOutput + static_cast<int>(a - free),
                          kOutput + static_cast<int>(b - free)}});
  if (factors.empty()) return Tensor::scalar(n, 1);

  std::vector<int> output;
  for (std::size_t f = 0; f < 2 * s.pbar; ++f)
    output.push_back(kOutput + static_cast<int>(f));
  return contract_network(std::move(factors), output,
                          signature.diagonal_rational());
}

namespace {

std::uint64_t sample_seed(std::uint64_t seed, std::size_t t) {
  RationalSource mix(seed ^ (0x9E3779B97F4A7C15ULL * (t + 1)));
  return mix.next_u64();
}

}  // namespace

EvaluationBatch evaluate_generators(std::span<const ContractionScheme> schemes,
                                    std::size_t pbar, std::size_t n,
                                    std::size_t samples, std::uint64_t seed,
                                    const Signature& signature) {
  if (signature.dim() != n)
    throw InvalidArgument("evaluation: signature does not match dimension");
  std::size_t max_order = 2;
  for (const auto& scheme : schemes) {
    if (scheme.signature.pbar != pbar)
      throw InvalidArgument("evaluation: schemes disagree on pbar");
    max_order = std::max(max_order, scheme.signature.max_order());
  }
  std::vector<NormalTensorSpace> spaces;
  for (std::size_t r = 2; r <= max_order; ++r) spaces.emplace_back(n, r);

  EvaluationBatch batch;
  batch.dim = n;
  batch.pbar = pbar;
  const std::size_t outputs = int_pow(n, 2 * pbar);
  batch.matrix = Matrix(samples * outputs, schemes.size());
  for (std::size_t t = 0; t < samples; ++t) {
    RationalSource source(sample_seed(seed, t));
    NormalInputs inputs;
    for (const auto& space : spaces) inputs.push_back(space.sample(source).tensor);
    for (std::size_t c = 0; c < schemes.size(); ++c) {
      const Tensor value = evaluate_scheme(schemes[c], inputs, signature);
      for (std::size_t i = 0; i < outputs; ++i)
        batch.matrix(t * outputs + i, c) = value.flat(i);
    }
    batch.samples.push_back(std::move(inputs));
  }
  return batch;
}

Matrix evaluation_matrix(std::size_t pbar, std::size_t k, std::size_t n,
                         std::size_t samples, std::uint64_t seed) {
  const auto schemes = enumerate_generators(pbar, k);
  return evaluate_generators(schemes, pbar, n, samples, seed,
                             Signature::riemannian(n))
      .matrix;
}

MetricJet jet_from_normal_tensor(const Tensor& x2, const Signature& signature) {
  const std::size_t n = signature.dim();
  if (x2.dim() != n || x2.rank() != 4)
    throw InvalidArgument("jet_from_normal_tensor: expected a 4-slot tensor");
  MetricJet g(signature, 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto p = g.component(a, b);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c; d < n; ++d) {
          Exponents e(n, 0);
          ++e[c];
          ++e[d];
          const Rational& x = x2.at({a, b, c, d});
          p.set_coefficient(e, c == d ? x / 2 : x);
        }
      g.set_component(a, b, std::move(p));
    }
  g.validate();
  return g;
}

}  // namespace curvident
