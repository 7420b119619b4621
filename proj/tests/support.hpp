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

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "purify/oracle.hpp"
#include "purify/protocol.hpp"
#include "purify/statevec.hpp"

namespace purify::test {

inline StateVector random_state(unsigned n, std::mt19937_64& gen) {
  std::normal_distribution<double> gauss;
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {gauss(gen), gauss(gen)};
  return StateVector::normalized(n, std::move(amps));
}

/// Haar-ish unitary from the QR factor of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(Eigen::Index dim, std::mt19937_64& gen) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = {gauss(gen), gauss(gen)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
}

inline LocalOperator to_operator(const Eigen::MatrixXcd& m, bool is_gate = true) {
  std::vector<Amplitude> entries;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(m(i, j));
  }
  return LocalOperator(m.rows() == 2 ? 1 : 2, std::move(entries), is_gate);
}

inline Eigen::MatrixXcd to_eigen(const LocalOperator& u) {
  Eigen::MatrixXcd m(u.dim(), u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < u.dim(); ++j) m(i, j) = u.at(i, j);
  }
  return m;
}

inline Eigen::VectorXcd to_eigen(const StateVector& s) {
  Eigen::VectorXcd v(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) v(i) = s[i];
  return v;
}

inline double max_abs_diff(const Eigen::VectorXcd& a, const StateVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < b.dim(); ++i) worst = std::max(worst, std::abs(a(i) - b[i]));
  return worst;
}

/// Eq. (14) as printed: parameter alpha*b / (a*beta) in the attenuate-bit-0
/// slots of the (qubit 1, ancilla) basis. Kept to show it is not the filter
/// that yields alpha^2 b^2 in the |alpha b| < |a beta| case.
inline LocalOperator literal_case2_operator(const PairSpec& p12, const PairSpec& p34) {
  const double r = std::abs(p12.large * p34.small) / std::abs(p34.large * p12.small);
  return to_operator(oracle::procrustean_matrix(r));
}

inline std::vector<double> weight_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 25; ++k) grid.push_back(0.02 * k);
  return grid;
}

}  // namespace purify::test
