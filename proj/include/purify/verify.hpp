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
#include <string>
#include <vector>

namespace purify {

struct VerifyOptions {
  std::uint64_t trials = 200000;
  std::uint64_t seed = 2026;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  /// Summary on success; first failure with observed vs expected otherwise.
  std::string detail;
};

/// Runs every invariant suite in a fixed order: unitarity, normalization,
/// closed-form grid, state quality, oracle equivalence, monte carlo.
/// Exceptions inside a suite are reported as that suite's failure.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace purify
