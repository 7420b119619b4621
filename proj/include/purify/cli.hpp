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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "purify/errors.hpp"

namespace purify::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Invalid command-line input; maps to kExitUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Mode { Exact, Sample };
enum class Format { Json, Csv };

struct RunConfig {
  double beta2 = 0.2;
  /// Defaults to beta2 (equal pairs).
  std::optional<double> b2;
  double phase_beta = 0.0;
  double phase_b = 0.0;
  Mode mode = Mode::Exact;
  std::uint64_t trials = 200000;
  std::uint64_t seed = 1;
  Format format = Format::Json;
  std::optional<std::string> output;
};

/// start:stop:step, or a single value meaning a one-point grid.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;
};

/// Throws UsageError on malformed text, step <= 0 or start > stop.
GridSpec parse_grid(const std::string& text);

/// Grid values with the last point snapped onto stop; each value is checked
/// against (0, 0.5].
std::vector<double> expand_grid(const GridSpec& grid, const char* name);

struct SweepConfig {
  GridSpec beta2;
  /// Absent: b2 follows beta2 at every point.
  std::optional<GridSpec> b2;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> trials;
  std::optional<std::string> output;
};

struct VerifyConfig {
  std::uint64_t trials = 200000;
  std::uint64_t seed = 2026;
};

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (subcommands run, sweep, verify) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace purify::cli
