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

#include "curvident/kernel.hpp"

#include <set>

#include "curvident/errors.hpp"
#include "curvident/identities.hpp"

namespace curvident {

namespace {

// Independent streams for the batches of one run.
std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t stream) {
  RationalSource mix(seed * 4 + stream);
  return mix.next_u64();
}

void insert_rows(RowEchelon& echelon, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows() && !echelon.full(); ++r)
    echelon.insert(m.row(r));
}

}  // namespace

RankCertificate certified_rank(std::span<const ContractionScheme> schemes,
                               std::size_t pbar, std::size_t n,
                               std::uint64_t seed) {
  RankCertificate c;
  c.dim = n;
  c.columns = schemes.size();
  c.samples_per_batch = std::max<std::size_t>(schemes.size(), 1);
  const auto sig = Signature::riemannian(n);
  const auto first = evaluate_generators(schemes, pbar, n, c.samples_per_batch,
                                         batch_seed(seed, 0), sig);
  const auto second = evaluate_generators(schemes, pbar, n, c.samples_per_batch,
                                          batch_seed(seed, 1), sig);
  RowEchelon a(c.columns), b(c.columns);
  insert_rows(a, first.matrix);
  insert_rows(b, second.matrix);
  c.rank_first = a.rank();
  c.rank_second = b.rank();
  insert_rows(a, second.matrix);
  c.rank_union = a.rank();
  if (!c.stable())
    throw RankNotStabilized(
        "rank not stabilized in dimension " + std::to_string(n) + ": " +
        std::to_string(c.rank_first) + " / " + std::to_string(c.rank_second) +
        " / union " + std::to_string(c.rank_union));
  return c;
}

KernelDimension kernel_dimension_report(std::size_t pbar, std::size_t k,
                                        std::size_t n, std::uint64_t seed) {
  const std::size_t critical = 2 * k + pbar;
  if (n < 1 || n > critical)
    throw InvalidArgument("kernel dimension needs 1 <= n <= 2k + pbar = " +
                          std::to_string(critical));
  if (critical + 1 > kMaxKernelDim)
    throw CapExceeded("kernel dimension needs rank in dimension " +
                      std::to_string(critical + 1) + "; cap is " +
                      std::to_string(kMaxKernelDim));
  const auto schemes = enumerate_generators(pbar, k);
  KernelDimension out;
  out.pbar = pbar;
  out.k = k;
  out.dim = n;
  out.reference_dim = critical + 1;
  out.at_dim = certified_rank(schemes, pbar, n, seed);
  out.at_reference = certified_rank(schemes, pbar, out.reference_dim, seed);
  if (out.at_dim.rank_union > out.at_reference.rank_union)
    throw RankNotStabilized("rank drops from dimension " + std::to_string(n) +
                            " to " + std::to_string(out.reference_dim));
  out.dimension = out.at_reference.rank_union - out.at_dim.rank_union;
  return out;
}

std::size_t kernel_dimension(std::size_t pbar, std::size_t k, std::size_t n) {
  return kernel_dimension_report(pbar, k, n).dimension;
}

std::size_t predicted_kernel_dimension(std::size_t pbar) {
  std::size_t out = 1;
  for (std::size_t i = pbar; i < 2 * pbar; ++i) out *= i;
  return pbar <= 1 ? 1 : out;
}

namespace {

// sigma . S on the N_2 part of every sample, flattened in row order.
std::vector<Vector> permuted_s_rows(const EvaluationBatch& batch,
                                    std::size_t pbar, std::size_t k) {
  const auto perms = all_permutations(2 * pbar);
  std::vector<Vector> rows(perms.size());
  const auto sig = Signature::riemannian(batch.dim);
  for (const auto& inputs : batch.samples) {
    const Tensor s = s_tensor(pbar, k, jet_from_normal_tensor(inputs[0], sig));
    for (std::size_t p = 0; p < perms.size(); ++p) {
      const Tensor t = permute_slots(s, perms[p]);
      rows[p].insert(rows[p].end(), t.data().begin(), t.data().end());
    }
  }
  return rows;
}

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return is_zero(x); });
}

}  // namespace

MembershipReport membership_check(std::size_t pbar, std::size_t k,
                                  std::uint64_t seed) {
  MembershipReport out;
  out.pbar = pbar;
  out.k = k;
  out.critical_dim = 2 * k + pbar;
  out.predicted_dimension = predicted_kernel_dimension(pbar);
  const std::size_t below = out.critical_dim - 1;
  out.kernel_dimension = kernel_dimension_report(pbar, k, below, seed).dimension;

  const auto schemes = enumerate_generators(pbar, k);
  const std::size_t samples = std::max<std::size_t>(schemes.size(), 1);
  const auto high =
      evaluate_generators(schemes, pbar, out.critical_dim, samples,
                          batch_seed(seed, 2), Signature::riemannian(out.critical_dim));
  const auto low = evaluate_generators(schemes, pbar, below, samples,
                                       batch_seed(seed, 3),
                                       Signature::riemannian(below));

  std::set<Vector> distinct;
  for (auto& v : permuted_s_rows(high, pbar, k)) distinct.insert(std::move(v));
  out.distinct_tensors = distinct.size();
  out.nonzero_at_critical =
      std::any_of(distinct.begin(), distinct.end(),
                  [](const Vector& v) { return !all_zero(v); });
  out.vanishes_below = true;
  for (const auto& v : permuted_s_rows(low, pbar, k))
    out.vanishes_below = out.vanishes_below && all_zero(v);

  // rows of the critical-dimension matrix spanning its row space
  const Matrix& e = high.matrix;
  RowEchelon echelon(e.cols());
  Matrix selected;
  std::vector<std::size_t> selected_rows;
  for (std::size_t r = 0; r < e.rows() && !echelon.full(); ++r)
    if (echelon.insert(e.row(r))) {
      selected.append_row(e.row(r));
      selected_rows.push_back(r);
    }

  out.in_column_space = true;
  out.in_kernel = true;
  RowEchelon span(e.rows());
  for (const auto& v : distinct) {
    span.insert(v);
    Vector rhs;
    for (const auto r : selected_rows) rhs.push_back(v[r]);
    std::optional<Vector> c;
    if (selected_rows.empty()) {
      if (all_zero(v)) c = Vector(e.cols(), Rational(0));
    } else {
      c = solve(selected, rhs);
    }
    if (!c || e.multiply(*c) != v) {
      out.in_column_space = false;
      continue;
    }
    if (!all_zero(low.matrix.multiply(*c))) out.in_kernel = false;
  }
  out.span_dimension = span.rank();
  return out;
}

nlohmann::json to_json(const RankCertificate& c) {
  return {{"dim", c.dim},
          {"columns", c.columns},
          {"samples_per_batch", c.samples_per_batch},
          {"rank_first_batch", c.rank_first},
          {"rank_second_batch", c.rank_second},
          {"rank_union", c.rank_union}};
}

nlohmann::json to_json(const KernelDimension& k) {
  return {{"pbar", k.pbar},
          {"k", k.k},
          {"dim", k.dim},
          {"reference_dim", k.reference_dim},
          {"rank_at_dim", to_json(k.at_dim)},
          {"rank_at_reference", to_json(k.at_reference)},
          {"kernel_dimension", k.dimension}};
}

nlohmann::json to_json(const MembershipReport& m) {
  return {{"pbar", m.pbar},
          {"k", m.k},
          {"critical_dim", m.critical_dim},
          {"distinct_permuted_tensors", m.distinct_tensors},
          {"in_column_space", m.in_column_space},
          {"in_kernel", m.in_kernel},
          {"vanishes_below", m.vanishes_below},
          {"nonzero_at_critical", m.nonzero_at_critical},
          {"span_dimension", m.span_dimension},
          {"kernel_dimension", m.kernel_dimension},
          {"predicted_dimension", m.predicted_dimension},
          {"verdict", m.verdict()},
          {"matches_formula", m.matches_formula()}};
}

}  // namespace curvident
