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

#include "curvident/identities.hpp"

#include <algorithm>
#include <array>

#include "curvident/curvature.hpp"
#include "curvident/errors.hpp"

namespace curvident {

void IdentityJob::validate() const {
  if (k == 0 && pbar <= 1)
    throw ExceptionalCase("(pbar, k) = (" + std::to_string(pbar) + ", 0) is an " +
                          "exceptional case with no curvature identities");
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  if (dim == 0) throw InvalidArgument("dimension must be >= 1");
  if (dim > max_dim)
    throw CapExceeded("dimension " + std::to_string(dim) + " exceeds cap " +
                      std::to_string(max_dim));
  if (signature.dim() != dim)
    throw InvalidArgument("signature " + signature.to_string() +
                          " does not match dimension " + std::to_string(dim));
}

bool IdentityReport::identity_holds() const {
  return std::all_of(results.begin(), results.end(),
                     [](const TrialResult& r) { return r.exact_zero; });
}

bool IdentityReport::matches_prediction() const {
  return job.predicts_vanishing() == identity_holds();
}

namespace {

struct Enumerator {
  std::size_t n;
  std::size_t pbar;
  std::size_t k;
  const Tensor& mixed;  // R_{cd}^{ab}, slots (c, d, a, b)
  Tensor& upper;        // U_{i_1..i_pbar}^{j_1..j_pbar}

  std::vector<std::size_t> lower;  // (b_1..b_2k, i_1..i_pbar)
  std::vector<bool> used;

  void run() {
    used.assign(n, false);
    lower.assign(2 * k + pbar, 0);
    free_indices(0);
  }

  void free_indices(std::size_t s) {
    if (s == pbar) {
      dummy_indices(0);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      lower[2 * k + s] = i;
      free_indices(s + 1);
      used[i] = false;
    }
  }

  void dummy_indices(std::size_t t) {
    if (t == 2 * k) {
      accumulate();
      return;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (used[b]) continue;
      used[b] = true;
      lower[t] = b;
      dummy_indices(t + 1);
      used[b] = false;
    }
  }

  // delta^{C}_{L} = sign(rho) when C = L o rho with L repetition free.
  void accumulate() {
    const std::size_t m = lower.size();
    std::vector<std::size_t> index(2 * pbar);
    for (std::size_t s = 0; s < pbar; ++s) index[s] = lower[2 * k + s];
    auto rho = Permutation::identity(m);
    std::array<std::size_t, 4> slot{};
    do {
      Rational term = rho.sign();
      for (std::size_t t = 0; t < k && !is_zero(term); ++t) {
        slot = {lower[rho(2 * t)], lower[rho(2 * t + 1)], lower[2 * t],
                lower[2 * t + 1]};
        term *= mixed[slot];
      }
      if (is_zero(term)) continue;
      for (std::size_t s = 0; s < pbar; ++s)
        index[pbar + s] = lower[rho(2 * k + s)];
      upper[index] += term;
    } while (rho.next());
  }
};

}  // namespace

Tensor s_tensor_from_curvature(std::size_t pbar, std::size_t k,
                               const Tensor& riemann, const Tensor& metric) {
  const std::size_t n = metric.dim();
  if (riemann.rank() != 4 || riemann.dim() != n || metric.rank() != 2)
    throw InvalidArgument("s_tensor: curvature or metric has the wrong shape");
  const Tensor mixed = raise_slot(raise_slot(riemann, 2, metric), 3, metric);

  std::vector<Variance> slots(pbar, Variance::covariant);
  slots.resize(2 * pbar, Variance::contravariant);
  Tensor upper(n, std::move(slots));
  Enumerator{n, pbar, k, mixed, upper, {}, {}}.run();
  for (std::size_t s = pbar; s < 2 * pbar; ++s)
    upper = lower_slot(upper, s, metric);
  return upper;
}

Tensor s_tensor(std::size_t pbar, std::size_t k, const MetricJet& g) {
  return s_tensor_from_curvature(pbar, k, riemann(g), g.at_base());
}

Tensor permuted_s(const Permutation& sigma, std::size_t pbar, std::size_t k,
                  const MetricJet& g) {
  if (sigma.size() != 2 * pbar)
    throw InvalidArgument("permuted_s: permutation must act on 2 pbar slots");
  return permute_slots(s_tensor(pbar, k, g), sigma);
}

Rational pfaffian_density(const MetricJet& g) {
  const std::size_t n = g.dim();
  if (n % 2 != 0)
    throw InvalidArgument("pfaffian_density: dimension must be even");
  const Tensor r = riemann(g);
  const auto perms = all_permutations(n);
  Rational sum = 0;
  std::array<std::size_t, 4> slot{};
  for (const auto& a : perms)
    for (const auto& b : perms) {
      Rational term = a.sign() * b.sign();
      for (std::size_t t = 0; t < n / 2 && !is_zero(term); ++t) {
        slot = {a(2 * t), a(2 * t + 1), b(2 * t), b(2 * t + 1)};
        term *= r[slot];
      }
      sum += term;
    }
  return sum;
}

std::optional<Rational> proportionality(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim() || a.slots() != b.slots())
    throw InvalidArgument("proportionality: shapes differ");
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(b.flat(i))) {
      if (!is_zero(a.flat(i))) return std::nullopt;
      continue;
    }
    const Rational r = a.flat(i) / b.flat(i);
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

namespace {

// The closed forms S is compared against, where one exists for (pbar, k, n).
std::map<std::string, Tensor> reference_tensors(const IdentityJob& job,
                                                const MetricJet& g) {
  std::map<std::string, Tensor> out;
  if (job.pbar == 0 && job.k == 1)
    out.emplace("s_over_scalar_curvature",
                Tensor::scalar(g.dim(), scalar_curvature(g)));
  if (job.pbar == 1 && job.k == 1) out.emplace("s_over_einstein", einstein(g));
  if (job.pbar == 0 && job.dim == 2 * job.k)
    out.emplace("s_over_pfaffian", Tensor::scalar(g.dim(), pfaffian_density(g)));
  return out;
}

}  // namespace

IdentityReport verify_vanishing(const IdentityJob& job) {
  job.validate();
  IdentityReport report;
  report.job = job;

  const auto reference = random_metric_jet(job.dim, job.signature, 2, 0);
  const Tensor s_reference = s_tensor(job.pbar, job.k, reference);
  for (const auto& [name, t] : reference_tensors(job, reference))
    if (const auto c = proportionality(s_reference, t))
      report.constants[name] = {*c, true};

  for (std::size_t t = 0; t < job.trials; ++t) {
    TrialResult result;
    result.trial = t;
    result.seed = job.seed + t;
    const auto g = random_metric_jet(job.dim, job.signature, 2, result.seed);
    const Tensor s = s_tensor(job.pbar, job.k, g);
    std::vector<std::size_t> index(s.rank(), 0);
    std::size_t flat = 0;
    do {
      const auto& x = s.flat(flat++);
      if (is_zero(x)) continue;
      const Integer num = abs(x.get_num());
      if (num > report.max_abs_numerator) report.max_abs_numerator = num;
      if (result.exact_zero) {
        result.exact_zero = false;
        result.witness_index = index;
        result.witness_value = x;
      }
    } while (next_multi_index(index, s.dim()));

    if (!report.constants.empty()) {
      const auto refs = reference_tensors(job, g);
      for (auto& [name, c] : report.constants)
        if (s != c.value * refs.at(name)) c.consistent = false;
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

bool homogeneity_check(std::size_t pbar, std::size_t k, const MetricJet& g,
                       const Rational& lambda2) {
  const int exponent = static_cast<int>(pbar) - static_cast<int>(k);
  return s_tensor(pbar, k, rescale(g, lambda2)) ==
         pow(lambda2, exponent) * s_tensor(pbar, k, g);
}

bool universality_check(std::size_t pbar, std::size_t k, const MetricJet& g) {
  return restrict_to_base(s_tensor(pbar, k, cylinder_extend(g))) ==
         s_tensor(pbar, k, g);
}

nlohmann::json to_json(const IdentityJob& job) {
  return {{"pbar", job.pbar},   {"k", job.k},
          {"dim", job.dim},     {"signature", job.signature.to_string()},
          {"trials", job.trials}, {"seed", job.seed}};
}

nlohmann::json to_json(const IdentityReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json entry{{"trial", r.trial},
                         {"seed", r.seed},
                         {"exact_zero", r.exact_zero}};
    if (!r.exact_zero)
      entry["witness_component"] = {{"index", r.witness_index},
                                    {"value", to_string(r.witness_value)}};
    results.push_back(std::move(entry));
  }
  nlohmann::json constants = nlohmann::json::object();
  for (const auto& [name, c] : report.constants)
    constants[name] = {{"value", to_string(c.value)},
                       {"consistent", c.consistent}};
  return {{"schema", "curvident/1"},
          {"job", to_json(report.job)},
          {"critical_dim", report.job.critical_dim()},
          {"weight", report.job.weight()},
          {"results", std::move(results)},
          {"max_abs_numerator", report.max_abs_numerator.get_str()},
          {"constants", std::move(constants)},
          {"verdict", report.identity_holds() ? "identity holds"
                                              : "identity fails"},
          {"matches_prediction", report.matches_prediction()}};
}

}  // namespace curvident
