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

#include "purify/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "purify/bell.hpp"
#include "purify/errors.hpp"

namespace purify {
namespace {

void require_two_qubits(const StateVector& s) {
  if (s.n_qubits() != 2) {
    throw DimensionError("two-qubit state required");
  }
}

double abs_det(const StateVector& s) {
  return std::abs(s[0] * s[3] - s[1] * s[2]);
}

}  // namespace

SchmidtPair schmidt_coefficients(const StateVector& s) {
  require_two_qubits(s);
  const double frob = s.norm_squared();
  const double det = abs_det(s);
  const double disc = std::sqrt(std::max(0.0, frob * frob - 4.0 * det * det));
  const double max2 = 0.5 * (frob + disc);
  // det^2 = max2 * min2; dividing avoids the cancellation in (frob - disc).
  const double min2 = max2 > 0.0 ? det * det / max2 : 0.0;
  return SchmidtPair{std::sqrt(max2), std::sqrt(min2)};
}

double concurrence(const StateVector& s) {
  require_two_qubits(s);
  return std::min(1.0, 2.0 * abs_det(s));
}

double single_pair_purification_prob(const StateVector& s) {
  const auto sp = schmidt_coefficients(s);
  return 2.0 * sp.lambda_min * sp.lambda_min;
}

double bell_fidelity(const StateVector& s) {
  require_two_qubits(s);
  double best = 0.0;
  for (auto kind : kBellOutcomes) best = std::max(best, overlap(bell_vector(kind), s));
  return best;
}

}  // namespace purify
