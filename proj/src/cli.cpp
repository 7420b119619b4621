// Copyright 2026 The purify Authors
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

#include "purify/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "purify/protocol.hpp"
#include "purify/report.hpp"
#include "purify/verify.hpp"

namespace purify::cli {
namespace {

constexpr double kRangeSlack = 1e-12;

void check_weight(double value, const char* name) {
  if (!(value > 0.0 && value <= 0.5 + kRangeSlack)) {
    throw UsageError(fmt::format("{} must be in (0, 0.5], got {}", name, value));
  }
}

double parse_double(const std::string& text, const std::string& whole) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw UsageError(fmt::format("malformed grid '{}'", whole));
  }
  return value;
}

// Writes to the configured path, or to out when none is given.
void emit(const std::optional<std::string>& path, std::ostream& out,
          const std::string& document) {
  if (!path) {
    out << document;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw UsageError(fmt::format("cannot open output file '{}'", *path));
  file << document;
}

std::string run_csv(const BranchReport& report, const std::optional<SampleTally>& tally) {
  std::string doc =
      "outcome,branch_probability,filter_applied,joint_success_probability,"
      "joint_failure_probability";
  if (tally) doc += ",success_count,failure_count";
  doc += '\n';
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& br = report.branches[k];
    doc += fmt::format("{},{},{},{},{}", to_string(br.outcome),
                       format_number(br.branch_probability), br.filter_applied ? 1 : 0,
                       format_number(br.joint_success_probability),
                       format_number(br.joint_failure_probability));
    if (tally) doc += fmt::format(",{},{}", tally->counts[k][0], tally->counts[k][1]);
    doc += '\n';
  }
  return doc;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (!text.empty() && text.back() == ':') parts.push_back("");

  GridSpec grid;
  if (parts.size() == 1) {
    grid.start = grid.stop = parse_double(parts[0], text);
    grid.step = 1.0;
  } else if (parts.size() == 3) {
    grid.start = parse_double(parts[0], text);
    grid.stop = parse_double(parts[1], text);
    grid.step = parse_double(parts[2], text);
  } else {
    throw UsageError(fmt::format("malformed grid '{}', expected start:stop:step", text));
  }
  if (!(grid.step > 0.0) || !std::isfinite(grid.step)) {
    throw UsageError(fmt::format("grid step must be positive in '{}'", text));
  }
  if (!(grid.start <= grid.stop)) {
    throw UsageError(fmt::format("empty grid '{}': start exceeds stop", text));
  }
  return grid;
}

std::vector<double> expand_grid(const GridSpec& grid, const char* name) {
  const double span = (grid.stop - grid.start) / grid.step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  if (count > 1000000) throw UsageError(fmt::format("{} grid has too many points", name));
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double v = grid.start + static_cast<double>(i) * grid.step;
    if (std::abs(v - grid.stop) <= 1e-9 * grid.step) v = grid.stop;
    check_weight(v, name);
    values.push_back(std::min(v, 0.5));
  }
  return values;
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_weight(config.beta2, "--beta2");
    const double b2 = config.b2.value_or(config.beta2);
    check_weight(b2, "--b2");
    if (config.mode == Mode::Sample && config.trials < 1) {
      throw UsageError("--trials must be at least 1 in sample mode");
    }
    const auto p12 = PairSpec::from_small_weight(std::min(config.beta2, 0.5), config.phase_beta);
    const auto p34 = PairSpec::from_small_weight(std::min(b2, 0.5), config.phase_b);
    const auto report = run_exact(p12, p34);
    std::optional<SampleTally> tally;
    if (config.mode == Mode::Sample) tally = sample_report(report, config.trials, config.seed);

    std::string doc;
    if (config.format == Format::Csv) {
      doc = run_csv(report, tally);
    } else {
      auto json = to_json(report);
      json["mode"] = config.mode == Mode::Exact ? "exact" : "sample";
      if (tally) json["tally"] = to_json(*tally);
      doc = json.dump(2) + "\n";
    }
    emit(config.output, out, doc);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto beta2s = expand_grid(config.beta2, "beta2");
    std::vector<std::pair<double, double>> points;
    if (config.b2) {
      const auto b2s = expand_grid(*config.b2, "b2");
      for (double x : beta2s) {
        for (double y : b2s) points.emplace_back(x, y);
      }
    } else {
      for (double x : beta2s) points.emplace_back(x, x);
    }

    std::string doc(kSweepHeader);
    if (config.trials) doc += ",p_success_sampled";
    doc += '\n';
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto row = make_sweep_row(points[i].first, points[i].second, config.trials,
                                      derive_seed(config.seed, i));
      doc += format_sweep_row(row);
      doc += '\n';
    }
    emit(config.output, out, doc);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err) {
  if (config.trials < 1) {
    err << "error: --trials must be at least 1\n";
    return kExitUsage;
  }
  const auto results = run_verification(VerifyOptions{config.trials, config.seed});
  const SuiteResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    if (!r.passed && first_failure == nullptr) first_failure = &r;
  }
  if (first_failure != nullptr) {
    out << "verification FAILED in suite '" << first_failure->name
        << "': " << first_failure->detail << '\n';
    return kExitVerifyFailed;
  }
  out << "verification passed: " << results.size() << " suites\n";
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement swapping with local Procrustean filtering"};
  app.require_subcommand(1);

  RunConfig run_cfg;
  std::string run_mode = "exact";
  std::string run_format = "json";
  std::optional<double> run_b2;
  std::string run_output;
  auto* run = app.add_subcommand("run", "Exact probability tree (or sampled tally) for one pair of pairs");
  run->add_option("--beta2", run_cfg.beta2, "Smaller Schmidt weight |beta|^2 of pair (1,2), in (0, 0.5]")
      ->required();
  run->add_option("--b2", run_b2, "Smaller Schmidt weight |b|^2 of pair (3,4); defaults to --beta2");
  run->add_option("--phase-beta", run_cfg.phase_beta, "Phase of beta in radians");
  run->add_option("--phase-b", run_cfg.phase_b, "Phase of b in radians");
  run->add_option("--mode", run_mode, "exact or sample")->check(CLI::IsMember({"exact", "sample"}));
  run->add_option("--trials", run_cfg.trials, "Samples in sample mode");
  run->add_option("--seed", run_cfg.seed, "Seed for sample mode");
  run->add_option("--format", run_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--output,-o", run_output, "Output path (default: standard output)");

  SweepConfig sweep_cfg;
  std::string sweep_beta2;
  std::string sweep_b2;
  std::optional<std::uint64_t> sweep_trials;
  std::string sweep_output;
  auto* sweep = app.add_subcommand("sweep", "CSV table of exact probabilities over a grid");
  sweep->add_option("--beta2", sweep_beta2, "start:stop:step (or a single value)")->required();
  sweep->add_option("--b2", sweep_b2, "start:stop:step (or a single value); defaults to the beta2 diagonal");
  sweep->add_option("--seed", sweep_cfg.seed, "Master seed; each grid point derives its own");
  sweep->add_option("--trials", sweep_trials, "Also sample each point and add p_success_sampled");
  sweep->add_option("--output,-o", sweep_output, "Output path (default: standard output)");

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--trials", verify_cfg.trials, "Monte Carlo trials per point");
  verify->add_option("--seed", verify_cfg.seed, "Master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (run->parsed()) {
    run_cfg.b2 = run_b2;
    run_cfg.mode = run_mode == "sample" ? Mode::Sample : Mode::Exact;
    run_cfg.format = run_format == "csv" ? Format::Csv : Format::Json;
    if (!run_output.empty()) run_cfg.output = run_output;
    return cmd_run(run_cfg, out, err);
  }
  if (sweep->parsed()) {
    try {
      sweep_cfg.beta2 = parse_grid(sweep_beta2);
      if (!sweep_b2.empty()) sweep_cfg.b2 = parse_grid(sweep_b2);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    sweep_cfg.trials = sweep_trials;
    if (!sweep_output.empty()) sweep_cfg.output = sweep_output;
    return cmd_sweep(sweep_cfg, out, err);
  }
  return cmd_verify(verify_cfg, out, err);
}

}  // namespace purify::cli
