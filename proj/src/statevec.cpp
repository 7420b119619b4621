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

#include "purify/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "purify/errors.hpp"

namespace purify {
namespace {

double squared_norm(std::span<const Amplitude> amps) {
  double acc = 0.0;
  for (const auto& a : amps) acc += std::norm(a);
  return acc;
}

void require_finite(std::span<const Amplitude> values, const char* what) {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw StateError(fmt::format("{} contains a non-finite amplitude", what));
    }
  }
}

std::size_t bit_of(unsigned n_qubits, unsigned qubit) {
  return std::size_t{1} << (n_qubits - qubit);
}

void check_targets(unsigned n_qubits, std::span<const unsigned> targets) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 1 || targets[i] > n_qubits) {
      throw DimensionError(fmt::format("qubit {} outside register of {} qubits",
                                       targets[i], n_qubits));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw DimensionError(
            fmt::format("qubit {} listed twice in targets", targets[i]));
      }
    }
  }
}

}  // namespace

StateVector::StateVector(unsigned n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
  if (n_qubits_ == 0 || n_qubits_ > 8 * sizeof(std::size_t) - 1) {
    throw DimensionError(fmt::format("invalid qubit count {}", n_qubits_));
  }
  if (amps_.size() != (std::size_t{1} << n_qubits_)) {
    throw DimensionError(fmt::format("{} amplitudes for {} qubits",
                                     amps_.size(), n_qubits_));
  }
  require_finite(amps_, "state");
  const double n2 = squared_norm(amps_);
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw StateError(fmt::format("state not normalized: squared norm {}", n2));
  }
}

StateVector StateVector::basis(unsigned n_qubits, std::size_t index) {
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  if (index >= amps.size()) {
    throw DimensionError(
        fmt::format("basis index {} out of range for {} qubits", index, n_qubits));
  }
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::normalized(unsigned n_qubits,
                                    std::vector<Amplitude> amps) {
  require_finite(amps, "state");
  const double n2 = squared_norm(amps);
  if (n2 < kProbabilityCutoff) {
    throw StateError("cannot normalize a vanishing state");
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= scale;
  return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm_squared() const { return squared_norm(amps_); }

Amplitude inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inner product of states with different sizes");
  }
  Amplitude acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double overlap(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

LocalOperator::LocalOperator(unsigned arity, std::vector<Amplitude> entries,
                             bool is_gate)
    : arity_(arity), entries_(std::move(entries)), is_gate_(is_gate) {
  if (arity_ != 1 && arity_ != 2) {
    throw DimensionError(fmt::format("operator arity {} not supported", arity_));
  }
  if (entries_.size() != dim() * dim()) {
    throw DimensionError(fmt::format("{} entries for an arity-{} operator",
                                     entries_.size(), arity_));
  }
  require_finite(entries_, "operator");
  if (is_gate_) {
    const double err = unitarity_error();
    if (err > kUnitaryTolerance) {
      throw NonUnitaryError(
          fmt::format("operator flagged as gate is not unitary (error {:.3e})", err));
    }
  }
}

double LocalOperator::unitarity_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      Amplitude acc = 0.0;
      for (std::size_t k = 0; k < dim(); ++k) {
        acc += std::conj(at(k, i)) * at(k, j);
      }
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

StateVector tensor(const StateVector& s1, const StateVector& s2,
                   unsigned max_qubits) {
  const unsigned n = s1.n_qubits() + s2.n_qubits();
  if (n > max_qubits) {
    throw RegisterOverflow(fmt::format(
        "tensor product of {} qubits exceeds the register cap of {}", n,
        max_qubits));
  }
  std::vector<Amplitude> amps(s1.dim() * s2.dim());
  for (std::size_t i = 0; i < s1.dim(); ++i) {
    for (std::size_t j = 0; j < s2.dim(); ++j) {
      amps[i * s2.dim() + j] = s1[i] * s2[j];
    }
  }
  return StateVector::normalized(n, std::move(amps));
}

StateVector apply_local(const StateVector& s, const LocalOperator& u,
                        std::span<const unsigned> targets) {
  if (targets.size() != u.arity()) {
    throw DimensionError(fmt::format("operator of arity {} given {} targets",
                                     u.arity(), targets.size()));
  }
  check_targets(s.n_qubits(), targets);

  // offsets[j] is the global index contribution of local basis state j.
  const std::size_t local_dim = u.dim();
  std::vector<std::size_t> offsets(local_dim, 0);
  std::size_t target_mask = 0;
  for (std::size_t m = 0; m < targets.size(); ++m) {
    const std::size_t bit = bit_of(s.n_qubits(), targets[m]);
    target_mask |= bit;
    for (std::size_t j = 0; j < local_dim; ++j) {
      if ((j >> m) & 1U) offsets[j] |= bit;
    }
  }

  std::vector<Amplitude> out(s.dim());
  std::vector<Amplitude> local(local_dim);
  for (std::size_t base = 0; base < s.dim(); ++base) {
    if (base & target_mask) continue;
    for (std::size_t j = 0; j < local_dim; ++j) local[j] = s[base | offsets[j]];
    for (std::size_t row = 0; row < local_dim; ++row) {
      Amplitude acc = 0.0;
      for (std::size_t col = 0; col < local_dim; ++col) {
        acc += u.at(row, col) * local[col];
      }
      out[base | offsets[row]] = acc;
    }
  }
  if (u.is_gate()) return StateVector(s.n_qubits(), std::move(out));
  return StateVector::normalized(s.n_qubits(), std::move(out));
}

Projection project_onto(const StateVector& s, const StateVector& probe,
                        std::span<const unsigned> targets) {
  if (probe.n_qubits() != targets.size()) {
    throw DimensionError(fmt::format("probe of {} qubits given {} targets",
                                     probe.n_qubits(), targets.size()));
  }
  check_targets(s.n_qubits(), targets);
  if (targets.size() >= s.n_qubits()) {
    throw DimensionError("projection must leave at least one qubit unmeasured");
  }

  const unsigned n = s.n_qubits();
  const unsigned p = probe.n_qubits();
  std::vector<unsigned> rest;
  for (unsigned q = 1; q <= n; ++q) {
    if (std::find(targets.begin(), targets.end(), q) == targets.end()) {
      rest.push_back(q);
    }
  }
  const auto n_rest = static_cast<unsigned>(rest.size());

  std::vector<std::size_t> probe_offsets(probe.dim(), 0);
  for (std::size_t k = 0; k < probe.dim(); ++k) {
    for (unsigned m = 1; m <= p; ++m) {
      if ((k >> (p - m)) & 1U) probe_offsets[k] |= bit_of(n, targets[m - 1]);
    }
  }

  std::vector<Amplitude> residual(std::size_t{1} << n_rest);
  for (std::size_t r = 0; r < residual.size(); ++r) {
    std::size_t base = 0;
    for (unsigned i = 1; i <= n_rest; ++i) {
      if ((r >> (n_rest - i)) & 1U) base |= bit_of(n, rest[i - 1]);
    }
    Amplitude acc = 0.0;
    for (std::size_t k = 0; k < probe.dim(); ++k) {
      acc += std::conj(probe[k]) * s[base | probe_offsets[k]];
    }
    residual[r] = acc;
  }

  Projection result;
  result.probability = squared_norm(residual);
  if (result.probability >= kProbabilityCutoff) {
    result.residual = StateVector::normalized(n_rest, std::move(residual));
  }
  return result;
}

}  // namespace purify
