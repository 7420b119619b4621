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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace purify {

using Amplitude = std::complex<double>;

inline constexpr unsigned kDefaultMaxQubits = 6;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-12;
/// Branches with probability below this are treated as impossible.
inline constexpr double kProbabilityCutoff = 1e-14;

/**
 * Normalized dense state of a small qubit register.
 *
 * Qubits are 1-indexed and qubit k contributes bit 2^(n-k) to the amplitude
 * index, so qubit 1 is the most significant bit and kets read left to right:
 * |q1 q2 ... qn>.
 *
 * Instances are immutable; every operation returns a fresh state.
 */
class StateVector {
 public:
  /// Throws StateError unless amps has 2^n entries, all finite, unit norm.
  StateVector(unsigned n_qubits, std::vector<Amplitude> amps);

  /// Computational basis state |index> on n qubits.
  static StateVector basis(unsigned n_qubits, std::size_t index);

  /// Rescales amps to unit norm; throws StateError if the norm is below the
  /// probability cutoff.
  static StateVector normalized(unsigned n_qubits, std::vector<Amplitude> amps);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Amplitude> amps() const { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

 private:
  unsigned n_qubits_;
  std::vector<Amplitude> amps_;
};

/// <a|b>, conjugating a.
Amplitude inner(const StateVector& a, const StateVector& b);

/// Squared overlap |<a|b>|^2 maximised over global phase; 1 means equal up to
/// global phase.
double overlap(const StateVector& a, const StateVector& b);

/**
 * Dense operator on 1 or 2 target qubits.
 *
 * Column j is the image of local basis state j. Local indices follow the
 * operator basis {|0>|0>, |1>|0>, |0>|1>, |1>|1>}: the first target qubit
 * contributes bit 0 and the second target contributes bit 1. For example
 * with targets (1, a), column 2 is the image of |0>_1 |1>_a.
 */
class LocalOperator {
 public:
  /// Row-major entries, 4^arity of them. When is_gate is set the matrix must
  /// be unitary within kUnitaryTolerance or NonUnitaryError is thrown.
  LocalOperator(unsigned arity, std::vector<Amplitude> entries,
                bool is_gate = true);

  unsigned arity() const { return arity_; }
  std::size_t dim() const { return std::size_t{1} << arity_; }
  bool is_gate() const { return is_gate_; }
  const Amplitude& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim() + col];
  }
  std::span<const Amplitude> entries() const { return entries_; }

  /// max |(U^dagger U - I)_ij|
  double unitarity_error() const;

 private:
  unsigned arity_;
  std::vector<Amplitude> entries_;
  bool is_gate_;
};

/// s1 occupies the high-order qubits of the result.
StateVector tensor(const StateVector& s1, const StateVector& s2,
                   unsigned max_qubits = kDefaultMaxQubits);

/**
 * Applies u to the listed qubits (1-indexed, distinct) and leaves the rest
 * untouched. Non-gate operators are allowed; their output is renormalized and
 * a StateError is thrown if it vanishes.
 */
StateVector apply_local(const StateVector& s, const LocalOperator& u,
                        std::span<const unsigned> targets);

struct Projection {
  double probability = 0.0;
  /// State of the untouched qubits in their original order; absent when the
  /// probability is below kProbabilityCutoff.
  std::optional<StateVector> residual;
};

/**
 * Partial inner product <probe|_targets |s>. probe qubit m pairs with
 * targets[m - 1]. At least one qubit must remain outside targets.
 */
Projection project_onto(const StateVector& s, const StateVector& probe,
                        std::span<const unsigned> targets);

}  // namespace purify
