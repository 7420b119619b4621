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

#include "purify/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "purify/analysis.hpp"
#include "purify/errors.hpp"

namespace purify {

PairSpec PairSpec::from_small_weight(double small_weight, double phase) {
  if (!(small_weight >= 0.0 && small_weight <= 0.5)) {
    throw PairSpecError(
        fmt::format("small Schmidt weight {} outside [0, 0.5]", small_weight));
  }
  PairSpec spec{std::sqrt(1.0 - small_weight),
                std::polar(std::sqrt(small_weight), phase)};
  spec.validate();
  return spec;
}

void PairSpec::validate() const {
  const double n2 = std::norm(large) + std::norm(small);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
    throw PairSpecError(fmt::format("pair not normalized: |large|^2 + |small|^2 = {}", n2));
  }
  if (std::abs(small) > std::abs(large) + kNormTolerance) {
    throw PairSpecError("|small| exceeds |large|");
  }
}

StateVector make_pair(const PairSpec& spec) {
  spec.validate();
  return StateVector(2, {spec.large, 0.0, 0.0, spec.small});
}

std::string_view to_string(PsiCase c) {
  switch (c) {
    case PsiCase::Case1: return "Case1";
    case PsiCase::Case2: return "Case2";
    case PsiCase::Tie: return "Tie";
  }
  return "?";
}

PsiCase classify_psi_case(const PairSpec& pair12, const PairSpec& pair34) {
  pair12.validate();
  pair34.validate();
  const double alpha_b = std::abs(pair12.large * pair34.small);
  const double a_beta = std::abs(pair34.large * pair12.small);
  if (alpha_b > a_beta + 1e-12) return PsiCase::Case1;
  if (alpha_b < a_beta - 1e-12) return PsiCase::Case2;
  return PsiCase::Tie;
}

BranchReport run_exact(const PairSpec& pair12, const PairSpec& pair34) {
  BranchReport report;
  report.pair12 = pair12;
  report.pair34 = pair34;
  report.psi_case = classify_psi_case(pair12, pair34);

  // Register (1, 2, 3, 4); Bell measurement leaves particles (1, 4).
  const auto joint = tensor(make_pair(pair12), make_pair(pair34));
  auto bell = bell_measure_exact(joint, 2, 3);

  double total_success = 0.0;
  double total_mass = 0.0;
  for (std::size_t k = 0; k < bell.size(); ++k) {
    BranchRecord& rec = report.branches[k];
    rec.outcome = bell[k].outcome;
    rec.branch_probability = bell[k].probability;
    rec.branch_state = std::move(bell[k].post_state);

    if (rec.branch_state) {
      const StateVector& state = *rec.branch_state;
      std::optional<FilterPlan> plan;
      if (bell_fidelity(state) < 1.0 - kBellSkipTolerance) {
        try {
          plan = plan_filter(state);
        } catch (const FilterPlanError&) {
          // Single-term branch: no local filter can entangle it.
        }
        if (plan) {
          auto outcome = apply_filter(state, *plan);
          rec.filter_applied = true;
          rec.plan = plan;
          rec.joint_success_probability = rec.branch_probability * outcome.success_probability;
          rec.joint_failure_probability = rec.branch_probability * outcome.failure_probability;
          rec.success_state = std::move(outcome.success_state);
          rec.failure_state = std::move(outcome.failure_state);
        } else {
          rec.joint_failure_probability = rec.branch_probability;
          rec.failure_state = state;
        }
      } else {
        rec.joint_success_probability = rec.branch_probability;
        rec.success_state = state;
      }
    }
    total_success += rec.joint_success_probability;
    total_mass += rec.joint_success_probability + rec.joint_failure_probability;
  }

  report.totals.total_success_probability = total_success;
  report.totals.predicted_total =
      2.0 * std::min(std::norm(pair12.small), std::norm(pair34.small));
  report.totals.max_abs_error =
      std::max(std::abs(total_success - report.totals.predicted_total),
               std::abs(total_mass - 1.0));
  return report;
}

std::uint64_t SampleTally::successes() const {
  std::uint64_t acc = 0;
  for (const auto& c : counts) acc += c[0];
  return acc;
}

std::uint64_t SampleTally::branch_count(BellOutcome kind) const {
  const auto& c = counts[static_cast<std::size_t>(kind)];
  return c[0] + c[1];
}

namespace {

// 53 high bits mapped to [0, 1); fixed so results do not depend on the
// standard library's distribution implementations.
double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

SampleTally sample_report(const BranchReport& report, std::uint64_t trials,
                          std::uint64_t seed) {
  std::array<double, 4> cumulative{};
  std::array<double, 4> conditional_success{};
  double acc = 0.0;
  std::size_t last_possible = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& rec = report.branches[k];
    const double mass = rec.joint_success_probability + rec.joint_failure_probability;
    acc += mass;
    cumulative[k] = acc;
    conditional_success[k] = mass > 0.0 ? rec.joint_success_probability / mass : 0.0;
    if (mass > 0.0) last_possible = k;
  }

  SampleTally tally;
  tally.seed = seed;
  tally.trials = trials;
  std::mt19937_64 gen(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double u = unit_uniform(gen) * acc;
    std::size_t k = 0;
    while (k < last_possible && !(u < cumulative[k])) ++k;
    const bool success = unit_uniform(gen) < conditional_success[k];
    ++tally.counts[k][success ? 0 : 1];
  }
  return tally;
}

SampleTally run_sampled(const PairSpec& pair12, const PairSpec& pair34,
                        std::uint64_t trials, std::uint64_t seed) {
  return sample_report(run_exact(pair12, pair34), trials, seed);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace purify
