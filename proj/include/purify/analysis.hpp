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

#include "purify/statevec.hpp"

/// Entanglement diagnostics for two-qubit pure states. Inputs are assumed
/// normalized; every function throws DimensionError on a non-2-qubit state.
namespace purify {

struct SchmidtPair {
  double lambda_max = 1.0;
  double lambda_min = 0.0;
};

/// Singular values of M[i][j] = <ij|s>, via the closed-form 2x2 expression
/// lambda^2 = (1 +- sqrt(1 - 4|det M|^2)) / 2.
SchmidtPair schmidt_coefficients(const StateVector& s);

/// 2 |a00 a11 - a01 a10|
double concurrence(const StateVector& s);

/// Optimal local-filtering probability 2 lambda_min^2 of reaching a Bell pair.
double single_pair_purification_prob(const StateVector& s);

/// max over the four Bell vectors b of |<b|s>|^2
double bell_fidelity(const StateVector& s);

}  // namespace purify
