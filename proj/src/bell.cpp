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

#include "purify/bell.hpp"

#include <cmath>

#include "purify/errors.hpp"

namespace purify {

std::string_view to_string(BellOutcome kind) {
  switch (kind) {
    case BellOutcome::PhiPlus: return "PhiPlus";
    case BellOutcome::PhiMinus: return "PhiMinus";
    case BellOutcome::PsiPlus: return "PsiPlus";
    case BellOutcome::PsiMinus: return "PsiMinus";
  }
  return "?";
}

StateVector bell_vector(BellOutcome kind) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case BellOutcome::PhiPlus: return StateVector(2, {h, 0.0, 0.0, h});
    case BellOutcome::PhiMinus: return StateVector(2, {h, 0.0, 0.0, -h});
    case BellOutcome::PsiPlus: return StateVector(2, {0.0, h, h, 0.0});
    case BellOutcome::PsiMinus: return StateVector(2, {0.0, h, -h, 0.0});
  }
  throw DimensionError("unknown Bell outcome");
}

std::array<BellBranch, 4> bell_measure_exact(const StateVector& s, unsigned qi,
                                             unsigned qj) {
  if (qi == qj) throw DimensionError("Bell measurement needs two distinct qubits");
  const std::array<unsigned, 2> targets = {qi, qj};
  std::array<BellBranch, 4> out{};
  for (std::size_t k = 0; k < kBellOutcomes.size(); ++k) {
    auto proj = project_onto(s, bell_vector(kBellOutcomes[k]), targets);
    out[k] = BellBranch{kBellOutcomes[k], proj.probability,
                        std::move(proj.residual)};
  }
  return out;
}

}  // namespace purify
