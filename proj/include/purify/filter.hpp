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

#include "purify/statevec.hpp"

namespace purify {

/// Which qubit-1 component of a two-term branch state to shrink, and by how
/// much: ratio = (smaller amplitude) / (larger amplitude), phase included.
struct FilterPlan {
  unsigned attenuate_bit = 0;
  Amplitude ratio = 1.0;
};

struct FilterOutcome {
  FilterPlan plan;
  double success_probability = 0.0;
  std::optional<StateVector> success_state;
  double failure_probability = 0.0;
  std::optional<StateVector> failure_state;
};

/**
 * Plans the filter for a branch state c0|0 x> + c1|1 y> with x != y, i.e. the
 * forms left on particles (1, 4) by a Bell measurement on (2, 3).
 *
 * The larger-magnitude term is attenuated. On a tie (|c0| and |c1| within
 * 1e-12) the qubit-1 = 0 term is chosen and |ratio| is 1.
 *
 * Throws FilterPlanError unless exactly two amplitudes exceed the probability
 * cutoff and they differ in both qubits.
 */
FilterPlan plan_filter(const StateVector& branch_state);

/**
 * Unitary on (qubit 1, ancilla) in the operator basis
 * {|0>_1|0>_a, |1>_1|0>_a, |0>_1|1>_a, |1>_1|1>_a}. For attenuate_bit 0:
 *
 *   |0 0> -> r |0 0> + sqrt(1-|r|^2) |1 1>
 *   |1 0> -> |1 0>
 *   |0 1> -> sqrt(1-|r|^2) |0 0> - conj(r) |1 1>
 *   |1 1> -> -|0 1>
 *
 * and the mirror image (qubit-1 values exchanged) for attenuate_bit 1. With
 * real r and bit 0 this is exactly the textbook Procrustean matrix
 * [[r,0,s,0],[0,1,0,0],[0,0,0,-1],[s,0,-r,0]].
 *
 * Throws FilterPlanError if |r| > 1.
 */
LocalOperator build_filter(const FilterPlan& plan);

/// Attaches |0>_a, applies build_filter(plan) to (qubit 1, ancilla) and
/// measures the ancilla. Ancilla 0 is success.
FilterOutcome apply_filter(const StateVector& branch_state, const FilterPlan& plan);

/// apply_filter(branch_state, plan_filter(branch_state))
FilterOutcome filter_and_measure(const StateVector& branch_state);

}  // namespace purify
