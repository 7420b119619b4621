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
#include <optional>
#include <string_view>

#include "purify/statevec.hpp"

namespace purify {

enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kBellOutcomes = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus,
    BellOutcome::PsiMinus};

std::string_view to_string(BellOutcome kind);

/// Phi+- = (|00> +- |11>)/sqrt2, Psi+- = (|01> +- |10>)/sqrt2.
StateVector bell_vector(BellOutcome kind);

struct BellBranch {
  BellOutcome outcome;
  double probability = 0.0;
  /// Remaining qubits in register order; absent for impossible outcomes.
  std::optional<StateVector> post_state;
};

/// Exact four-outcome Bell measurement on qubits (qi, qj), qi paired with the
/// first qubit of each Bell vector. Records are in kBellOutcomes order.
std::array<BellBranch, 4> bell_measure_exact(const StateVector& s, unsigned qi,
                                             unsigned qj);

}  // namespace purify
