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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "purify/protocol.hpp"

namespace purify {

/// Exact column order of the sweep CSV.
inline constexpr std::string_view kSweepHeader =
    "beta2,b2,p_phi_plus,p_phi_minus,p_psi_plus,p_psi_minus,"
    "p_success_total,p_success_predicted,abs_err";

/// 10 significant digits, trailing zeros kept, '.' decimal separator
/// regardless of locale: 0.4 -> "0.4000000000".
std::string format_number(double value);

/// value rounded to 10 significant digits, for JSON output.
double round_significant(double value);

struct SweepRow {
  double beta2 = 0.0;
  double b2 = 0.0;
  BranchReport report;
  std::optional<double> sampled_success;
};

SweepRow make_sweep_row(double beta2, double b2,
                        std::optional<std::uint64_t> trials = std::nullopt,
                        std::uint64_t seed = 0);

/// One CSV line without newline. A trailing p_success_sampled column is
/// present only when the row carries a sampled value.
std::string format_sweep_row(const SweepRow& row);

nlohmann::json to_json(const PairSpec& spec);
nlohmann::json to_json(const BranchReport& report);
nlohmann::json to_json(const SampleTally& tally);

}  // namespace purify
