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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "purify/bell.hpp"
#include "purify/filter.hpp"
#include "purify/statevec.hpp"

namespace purify {

/// Schmidt data of one pair, large|00> + small|11>.
struct PairSpec {
  Amplitude large = 1.0;
  Amplitude small = 0.0;

  /// Pair with |small|^2 = small_weight and small = sqrt(w) e^{i phase}.
  static PairSpec from_small_weight(double small_weight, double phase = 0.0);

  /// Throws PairSpecError on a norm violation or |small| > |large|.
  void validate() const;
};

/// amps [large, 0, 0, small]
StateVector make_pair(const PairSpec& spec);

enum class PsiCase { Case1, Case2, Tie };

std::string_view to_string(PsiCase c);

/// Case1 iff |alpha b| > |a beta| (+1e-12), Case2 iff below (-1e-12).
PsiCase classify_psi_case(const PairSpec& pair12, const PairSpec& pair34);

struct BranchRecord {
  BellOutcome outcome = BellOutcome::PhiPlus;
  double branch_probability = 0.0;
  /// Normalized state of particles (1, 4) after the Bell measurement.
  std::optional<StateVector> branch_state;
  bool filter_applied = false;
  std::optional<FilterPlan> plan;
  double joint_success_probability = 0.0;
  double joint_failure_probability = 0.0;
  std::optional<StateVector> success_state;
  std::optional<StateVector> failure_state;
};

struct Totals {
  double total_success_probability = 0.0;
  /// 2 min(|beta|^2, |b|^2)
  double predicted_total = 0.0;
  /// max(|total - predicted|, |sum of joint probabilities - 1|)
  double max_abs_error = 0.0;
};

struct BranchReport {
  PairSpec pair12;
  PairSpec pair34;
  PsiCase psi_case = PsiCase::Tie;
  std::array<BranchRecord, 4> branches;
  Totals totals;

  const BranchRecord& branch(BellOutcome kind) const {
    return branches[static_cast<std::size_t>(kind)];
  }
};

/// Bell fidelity at or above 1 - kBellSkipTolerance skips the filter stage.
inline constexpr double kBellSkipTolerance = 1e-12;

/**
 * Exact probability tree: prepare |pair12>_{12} |pair34>_{34}, Bell-measure
 * (2, 3), then filter every branch on particles (1, 4) that is not already a
 * Bell state. Branches that are not of two-term form (a product pair on
 * either side) are reported as certain failure.
 */
BranchReport run_exact(const PairSpec& pair12, const PairSpec& pair34);

/// Name of the pinned pseudorandom generator; tallies are reproducible only
/// with this generator.
inline constexpr std::string_view kGeneratorName = "std::mt19937_64";

struct SampleTally {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  /// counts[outcome][0] = successes, counts[outcome][1] = failures.
  std::array<std::array<std::uint64_t, 2>, 4> counts{};

  std::uint64_t successes() const;
  std::uint64_t branch_count(BellOutcome kind) const;
};

/// Two-stage ancestral sampling of the exact tree.
SampleTally run_sampled(const PairSpec& pair12, const PairSpec& pair34,
                        std::uint64_t trials, std::uint64_t seed);

/// Same, reusing an already computed tree.
SampleTally sample_report(const BranchReport& report, std::uint64_t trials,
                          std::uint64_t seed);

/// Independent sub-seed for grid point `index` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace purify
