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
#include <complex>
#include <vector>

#include <Eigen/Dense>

/// Brute-force reference pipeline on dense Eigen matrices. Shares no code
/// with the index-arithmetic simulator; used by `purify verify` and the tests.
namespace purify::oracle {

using Complex = std::complex<double>;

/// Kronecker product of two vectors, a in the high-order positions.
Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

/**
 * Full 2^n x 2^n matrix of op acting on `targets` (1-indexed, qubit 1 most
 * significant). op's local index carries targets[m] in bit m, so the first
 * target is least significant.
 */
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& op, const std::vector<unsigned>& targets,
                       unsigned n_qubits);

/// Textbook Procrustean matrix in the basis {|00>,|10>,|01>,|11>} of
/// (qubit 1, ancilla) attenuating the qubit-1 = 0 component by r.
Eigen::Matrix4cd procrustean_matrix(Complex r);

struct OracleBranch {
  double branch_probability = 0.0;
  double joint_success = 0.0;
  double joint_failure = 0.0;
  /// Normalized (1, 4) state on ancilla 0; empty when joint_success vanishes.
  Eigen::VectorXcd success_state;
};

/**
 * Five-qubit register (1, 2, 3, 4, ancilla): builds the product state,
 * projects with dense Bell projectors on (2, 3), filters with the embedded
 * 32x32 Procrustean matrix (the qubit-1 = 1 variant obtained by conjugating
 * with X) and reads off ancilla probabilities. Branches are in
 * PhiPlus, PhiMinus, PsiPlus, PsiMinus order.
 */
std::array<OracleBranch, 4> brute_force_tree(Complex alpha, Complex beta, Complex a,
                                             Complex b);

}  // namespace purify::oracle
