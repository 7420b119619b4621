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

#include "purify/report.hpp"

#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

namespace purify {
namespace {

nlohmann::json amplitude_json(Amplitude a) {
  return {{"re", round_significant(a.real())}, {"im", round_significant(a.imag())}};
}

nlohmann::json state_json(const std::optional<StateVector>& s) {
  if (!s) return nullptr;
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& a : s->amps()) amps.push_back(amplitude_json(a));
  return amps;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  return fmt::format("{:#.10g}", value);
}

double round_significant(double value) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  return std::strtod(fmt::format("{:.10g}", value).c_str(), nullptr);
}

SweepRow make_sweep_row(double beta2, double b2, std::optional<std::uint64_t> trials,
                        std::uint64_t seed) {
  SweepRow row;
  row.beta2 = beta2;
  row.b2 = b2;
  row.report = run_exact(PairSpec::from_small_weight(beta2),
                         PairSpec::from_small_weight(b2));
  if (trials) {
    const auto tally = sample_report(row.report, *trials, seed);
    row.sampled_success =
        *trials == 0 ? 0.0
                     : static_cast<double>(tally.successes()) / static_cast<double>(*trials);
  }
  return row;
}

std::string format_sweep_row(const SweepRow& row) {
  const auto& t = row.report.totals;
  std::string line = format_number(row.beta2);
  auto add = [&line](double v) {
    line += ',';
    line += format_number(v);
  };
  add(row.b2);
  for (const auto& br : row.report.branches) add(br.joint_success_probability);
  add(t.total_success_probability);
  add(t.predicted_total);
  add(std::abs(t.total_success_probability - t.predicted_total));
  if (row.sampled_success) add(*row.sampled_success);
  return line;
}

nlohmann::json to_json(const PairSpec& spec) {
  return {{"large", amplitude_json(spec.large)},
          {"small", amplitude_json(spec.small)},
          {"small_weight", round_significant(std::norm(spec.small))}};
}

nlohmann::json to_json(const BranchReport& report) {
  nlohmann::json branches = nlohmann::json::array();
  for (const auto& br : report.branches) {
    nlohmann::json plan = nullptr;
    if (br.plan) {
      plan = {{"attenuate_bit", br.plan->attenuate_bit},
              {"ratio", amplitude_json(br.plan->ratio)}};
    }
    branches.push_back({
        {"outcome", to_string(br.outcome)},
        {"branch_probability", round_significant(br.branch_probability)},
        {"filter_applied", br.filter_applied},
        {"plan", plan},
        {"joint_success_probability", round_significant(br.joint_success_probability)},
        {"joint_failure_probability", round_significant(br.joint_failure_probability)},
        {"success_state", state_json(br.success_state)},
        {"failure_state", state_json(br.failure_state)},
    });
  }
  return {
      {"pairs", {{"pair12", to_json(report.pair12)}, {"pair34", to_json(report.pair34)}}},
      {"psi_case", to_string(report.psi_case)},
      {"branches", branches},
      {"totals",
       {{"total_success_probability",
         round_significant(report.totals.total_success_probability)},
        {"predicted_total", round_significant(report.totals.predicted_total)},
        {"max_abs_error", round_significant(report.totals.max_abs_error)}}},
  };
}

nlohmann::json to_json(const SampleTally& tally) {
  nlohmann::json counts = nlohmann::json::object();
  for (auto kind : kBellOutcomes) {
    const auto& c = tally.counts[static_cast<std::size_t>(kind)];
    counts[std::string(to_string(kind))] = {{"success", c[0]}, {"failure", c[1]}};
  }
  return {{"generator", kGeneratorName},
          {"seed", tally.seed},
          {"trials", tally.trials},
          {"counts", counts},
          {"success_frequency",
           tally.trials == 0 ? 0.0
                             : round_significant(static_cast<double>(tally.successes()) /
                                                 static_cast<double>(tally.trials))}};
}

}  // namespace purify
