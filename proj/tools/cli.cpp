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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "curvident/errors.hpp"
#include "curvident/identities.hpp"
#include "curvident/kernel.hpp"
#include "curvident/matchings.hpp"
#include "curvident/normal_tensors.hpp"

namespace curvident::cli {

namespace {

constexpr const char* kSchema = "curvident/1";

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

// A report is a JSON document or a CSV table whose first line carries the
// schema tag and the run configuration.
struct Report {
  nlohmann::json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

std::string render(const RunConfig& config, Report report) {
  std::ostringstream os;
  if (config.format == "csv") {
    os << "# " << kSchema << " " << to_json(config).dump() << "\n";
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        os << (i ? "," : "") << cells[i];
      os << "\n";
    };
    line(report.csv_header);
    for (const auto& row : report.csv_rows) line(row);
  } else {
    nlohmann::json doc{{"schema", kSchema}, {"config", to_json(config)}};
    doc.update(report.json);
    os << doc.dump(2) << "\n";
  }
  return os.str();
}

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::string join(const std::vector<std::size_t>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

int cmd_verify(RunConfig& config, Report& report) {
  IdentityJob job;
  job.pbar = *config.pbar;
  job.k = *config.k;
  job.dim = *config.dim;
  if (!config.signature) config.signature = std::to_string(job.dim) + ",0";
  job.signature = Signature::parse(*config.signature);
  job.trials = *config.trials;
  job.seed = config.seed;
  const auto result = verify_vanishing(job);

  report.json["report"] = to_json(result);
  report.csv_header = {"trial", "seed", "exact_zero", "witness_index",
                       "witness_value"};
  for (const auto& r : result.results)
    report.csv_rows.push_back(
        {str(r.trial), std::to_string(r.seed), str(r.exact_zero),
         r.exact_zero ? "" : join(r.witness_index, ' '),
         r.exact_zero ? "" : to_string(r.witness_value)});
  return result.matches_prediction() ? kOk : kMismatch;
}

void check_slot_range(std::size_t m_max, std::size_t n_max) {
  if (m_max % 2 != 0 || m_max < 2)
    throw InvalidArgument("--m-max must be even and >= 2");
  if (m_max > kMaxTableSlots)
    throw CapExceeded("--m-max is capped at " + str(kMaxTableSlots));
  if (n_max < 1) throw InvalidArgument("--n-max must be >= 1");
  if (n_max > kMaxTableDim)
    throw CapExceeded("--n-max is capped at " + str(kMaxTableDim));
}

int cmd_dim_table(const RunConfig& config, Report& report) {
  const std::size_t m_max = *config.m_max, n_max = *config.n_max;
  check_slot_range(m_max, n_max);
  nlohmann::json rows = nlohmann::json::array();
  report.csv_header = {"m", "n", "dimension"};
  for (std::size_t m = 2; m <= m_max; m += 2)
    for (std::size_t n = 1; n <= n_max; ++n) {
      const std::size_t d = dim_invariants(m, n);
      rows.push_back({{"m", m}, {"n", n}, {"dimension", d}});
      report.csv_rows.push_back({str(m), str(n), str(d)});
    }
  report.json["rows"] = std::move(rows);
  return kOk;
}

int cmd_kernel(const RunConfig& config, Report& report) {
  const std::size_t pbar = *config.pbar, k = *config.k;
  if (k == 0 && pbar <= 1)
    throw ExceptionalCase("(pbar, k) = (" + str(pbar) +
                          ", 0) is an exceptional case");
  const std::size_t critical = 2 * k + pbar;
  const auto below = kernel_dimension_report(pbar, k, critical - 1, config.seed);
  const auto at = kernel_dimension_report(pbar, k, critical, config.seed);
  const auto membership = membership_check(pbar, k, config.seed);
  const std::size_t predicted = predicted_kernel_dimension(pbar);
  const bool matches =
      below.dimension == predicted && at.dimension == 0 && membership.verdict();

  report.json["kernel"] = {{"below_critical", to_json(below)},
                           {"at_critical", to_json(at)}};
  report.json["predicted_dimension"] = predicted;
  report.json["membership"] = to_json(membership);
  report.json["matches_prediction"] = matches;
  report.csv_header = {"pbar", "k", "dim", "kernel_dimension",
                       "predicted_dimension"};
  report.csv_rows.push_back(
      {str(pbar), str(k), str(below.dim), str(below.dimension), str(predicted)});
  report.csv_rows.push_back(
      {str(pbar), str(k), str(at.dim), str(at.dimension), "0"});
  return matches ? kOk : kMismatch;
}

int cmd_reduce_check(const RunConfig& config, Report& report) {
  const std::size_t m_max = *config.m_max, n_max = *config.n_max;
  check_slot_range(m_max, n_max);
  bool ok = true;
  nlohmann::json checks = nlohmann::json::array();
  report.csv_header = {"m", "n", "dimension", "isomorphism_expected",
                       "equal_to_previous"};
  for (std::size_t m = 2; m <= m_max; m += 2) {
    const auto r = reduction_check(m, n_max);
    ok = ok && r.ok();
    checks.push_back({{"m", m},
                      {"dims", r.dims},
                      {"decreases", r.decreases},
                      {"unstable", r.unstable},
                      {"stable_from", r.stable_from},
                      {"ok", r.ok()}});
    for (std::size_t n = 1; n <= n_max; ++n)
      report.csv_rows.push_back(
          {str(m), str(n), str(r.dims[n - 1]), str(n + 1 > m),
           n == 1 ? "" : str(r.dims[n - 1] == r.dims[n - 2])});
  }
  report.json["checks"] = std::move(checks);
  report.json["ok"] = ok;
  return ok ? kOk : kMismatch;
}

int cmd_normal_dims(const RunConfig& config, Report& report) {
  const std::size_t n_max = *config.n_max;
  if (n_max < 1) throw InvalidArgument("--n-max must be >= 1");
  if (n_max > kMaxKernelDim)
    throw CapExceeded("--n-max is capped at " + str(kMaxKernelDim));
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  report.csv_header = {"r", "n", "dimension", "ambient", "symmetrization_rank",
                       "surjective"};
  for (std::size_t r = 2; r <= kMaxNormalOrder; ++r)
    for (std::size_t n = 1; n <= n_max; ++n) {
      const NormalTensorSpace space(n, r);
      const bool onto =
          space.symmetrization_rank() == n * symmetric_power_dimension(n, r + 1);
      ok = ok && onto;
      rows.push_back({{"r", r},
                      {"n", n},
                      {"dimension", space.dimension()},
                      {"ambient", space.ambient_dimension()},
                      {"symmetrization_rank", space.symmetrization_rank()},
                      {"surjective", onto}});
      report.csv_rows.push_back({str(r), str(n), str(space.dimension()),
                                 str(space.ambient_dimension()),
                                 str(space.symmetrization_rank()), str(onto)});
    }
  report.json["rows"] = std::move(rows);
  report.json["ok"] = ok;
  return ok ? kOk : kMismatch;
}

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"pbar", optional_json(c.pbar)},
          {"k", optional_json(c.k)},
          {"dim", optional_json(c.dim)},
          {"signature", optional_json(c.signature)},
          {"trials", optional_json(c.trials)},
          {"seed", c.seed},
          {"m_max", optional_json(c.m_max)},
          {"n_max", optional_json(c.n_max)},
          {"out", optional_json(c.out)},
          {"format", c.format}};
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact verification of dimensional curvature identities",
               "curvident"};
  app.require_subcommand(1);

  std::size_t pbar = 0, k = 0, dim = 0, trials = 20, m_max = 8, n_max = 8;
  std::size_t normal_n_max = 4;
  std::uint64_t seed = 0;
  std::string signature, out_path, format;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed")->capture_default_str();
    sub->add_option("--out", out_path, "Write the report to this file");
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* verify = app.add_subcommand("verify", "Check S vanishes below 2k + pbar");
  verify->add_option("--pbar", pbar)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--dim", dim)->required();
  verify->add_option("--signature", signature, "P,M (default: dim,0)");
  verify->add_option("--trials", trials)->capture_default_str();
  add_common(verify);

  auto* table = app.add_subcommand("dim-table", "Dimensions of invariant spaces");
  table->add_option("--m-max", m_max)->capture_default_str();
  table->add_option("--n-max", n_max)->capture_default_str();
  add_common(table);

  auto* kernel = app.add_subcommand("kernel", "Kernel dimensions and membership");
  kernel->add_option("--pbar", pbar)->required();
  kernel->add_option("--k", k)->required();
  add_common(kernel);

  auto* reduce = app.add_subcommand("reduce-check", "Stability of dimensions in n");
  reduce->add_option("--m-max", m_max)->capture_default_str();
  reduce->add_option("--n-max", n_max)->capture_default_str();
  add_common(reduce);

  auto* normal = app.add_subcommand("normal-dims", "Dimensions of N_r, r = 2..4");
  normal->add_option("--n-max", normal_n_max)->capture_default_str();
  add_common(normal);

  // CLI11 consumes the argument vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  auto* sub = app.get_subcommands().front();
  RunConfig config;
  config.command = sub->get_name();
  config.seed = seed;
  config.format = sub->get_option("--format")->count() ? format
                  : (sub == table || sub == normal)     ? "csv"
                                                        : "json";
  if (!out_path.empty()) config.out = out_path;
  if (sub == verify) {
    config.pbar = pbar;
    config.k = k;
    config.dim = dim;
    if (!signature.empty()) config.signature = signature;
    config.trials = trials;
  } else if (sub == kernel) {
    config.pbar = pbar;
    config.k = k;
  } else if (sub == normal) {
    config.n_max = normal_n_max;
  } else {
    config.m_max = m_max;
    config.n_max = n_max;
  }

  Report report;
  int code = kOk;
  try {
    if (sub == verify) code = cmd_verify(config, report);
    else if (sub == table) code = cmd_dim_table(config, report);
    else if (sub == kernel) code = cmd_kernel(config, report);
    else if (sub == reduce) code = cmd_reduce_check(config, report);
    else code = cmd_normal_dims(config, report);
  } catch (const RankNotStabilized& e) {
    err << "error: " << e.what() << "\n";
    return kUnstable;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const SingularMetric& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  const std::string text = render(config, std::move(report));
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write " << *config.out << "\n";
      return kInvalid;
    }
  } else {
    out << text;
  }
  return code;
}

}  // namespace curvident::cli
