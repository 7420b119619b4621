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

#include "purify/filter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "purify/errors.hpp"

namespace purify {
namespace {

constexpr double kTieTolerance = 1e-12;

}  // namespace

FilterPlan plan_filter(const StateVector& branch_state) {
  if (branch_state.n_qubits() != 2) {
    throw DimensionError("filter planning needs a two-qubit branch state");
  }
  std::vector<std::size_t> terms;
  for (std::size_t i = 0; i < branch_state.dim(); ++i) {
    if (std::abs(branch_state[i]) > kProbabilityCutoff) terms.push_back(i);
  }
  if (terms.size() != 2) {
    throw FilterPlanError(fmt::format(
        "branch state has {} non-negligible terms, expected 2", terms.size()));
  }
  // Index bit 1 is qubit 1 and bit 0 is qubit 4.
  const std::size_t i0 = terms[0];
  const std::size_t i1 = terms[1];
  if ((i0 >> 1) == (i1 >> 1)) {
    throw FilterPlanError("both terms share the qubit-1 value");
  }
  if ((i0 & 1U) == (i1 & 1U)) {
    throw FilterPlanError("both terms share the qubit-4 value");
  }

  // terms are sorted, so i0 carries qubit-1 bit 0.
  // Attenuate the larger term. A fixed orientation fails for
  // alpha*b|01> + beta*a|10> with |alpha b| < |a beta|.
  const Amplitude c0 = branch_state[i0];
  const Amplitude c1 = branch_state[i1];
  FilterPlan plan;
  if (std::abs(c0) + kTieTolerance >= std::abs(c1)) {
    plan.attenuate_bit = 0;
    plan.ratio = c1 / c0;
  } else {
    plan.attenuate_bit = 1;
    plan.ratio = c0 / c1;
  }
  if (std::abs(plan.ratio) > 1.0) plan.ratio /= std::abs(plan.ratio);
#ifdef PURIFY_MUTATION_INVERT_RATIO
  // Deliberate defect for the mutation test of `purify verify`.
  plan.ratio = 1.0 / plan.ratio;
#endif
  return plan;
}

LocalOperator build_filter(const FilterPlan& plan) {
  const Amplitude r = plan.ratio;
  if (!(std::abs(r) <= 1.0 + kUnitaryTolerance)) {
    throw FilterPlanError(
        fmt::format("filter ratio magnitude {} exceeds 1", std::abs(r)));
  }
  if (plan.attenuate_bit > 1) {
    throw FilterPlanError("attenuate_bit must be 0 or 1");
  }
  const Amplitude c = std::sqrt(std::max(0.0, 1.0 - std::norm(r)));

  // Operator basis index = q1 + 2*a.
  const std::size_t keep0 = plan.attenuate_bit;       // |k 0>, attenuated
  const std::size_t pass0 = 1 - plan.attenuate_bit;   // |k' 0>, untouched
  const std::size_t keep1 = plan.attenuate_bit + 2;   // |k 1>
  const std::size_t pass1 = 3 - plan.attenuate_bit;   // |k' 1>

  std::array<Amplitude, 16> m{};
  auto set = [&](std::size_t row, std::size_t col, Amplitude v) { m[row * 4 + col] = v; };
  set(keep0, keep0, r);
  set(pass1, keep0, c);
  set(pass0, pass0, 1.0);
  set(keep0, keep1, c);
  set(pass1, keep1, -std::conj(r));
  set(keep1, pass1, -1.0);
  return LocalOperator(2, std::vector<Amplitude>(m.begin(), m.end()));
}

FilterOutcome apply_filter(const StateVector& branch_state, const FilterPlan& plan) {
  if (branch_state.n_qubits() != 2) {
    throw DimensionError("filter needs a two-qubit branch state");
  }
  // Register (1, 4, a).
  const auto with_ancilla = tensor(branch_state, StateVector::basis(1, 0));
  const std::array<unsigned, 2> targets = {1, 3};
  const auto filtered = apply_local(with_ancilla, build_filter(plan), targets);

  const std::array<unsigned, 1> ancilla = {3};
  auto success = project_onto(filtered, StateVector::basis(1, 0), ancilla);
  auto failure = project_onto(filtered, StateVector::basis(1, 1), ancilla);

  FilterOutcome out;
  out.plan = plan;
  out.success_probability = success.probability;
  out.success_state = std::move(success.residual);
  out.failure_probability = failure.probability;
  out.failure_state = std::move(failure.residual);
  return out;
}

FilterOutcome filter_and_measure(const StateVector& branch_state) {
  return apply_filter(branch_state, plan_filter(branch_state));
}

}  // namespace purify
