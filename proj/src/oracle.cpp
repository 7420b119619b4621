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

#include "purify/oracle.hpp"

#include <cmath>

namespace purify::oracle {
namespace {

constexpr unsigned kQubits = 5;
constexpr unsigned kAncilla = 5;

Eigen::Vector4cd bell(int k) {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (k) {
    case 0: v << h, 0, 0, h; break;
    case 1: v << h, 0, 0, -h; break;
    case 2: v << 0, h, h, 0; break;
    default: v << 0, h, -h, 0; break;
  }
  return v;
}

}  // namespace

Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) out(i * b.size() + j) = a(i) * b(j);
  }
  return out;
}

Eigen::MatrixXcd embed(const Eigen::MatrixXcd& op, const std::vector<unsigned>& targets,
                       unsigned n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  std::size_t mask = 0;
  for (unsigned t : targets) mask |= std::size_t{1} << (n_qubits - t);
  auto local = [&](std::size_t idx) {
    std::size_t l = 0;
    for (std::size_t m = 0; m < targets.size(); ++m) {
      l |= ((idx >> (n_qubits - targets[m])) & 1U) << m;
    }
    return static_cast<Eigen::Index>(l);
  };
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    for (Eigen::Index col = 0; col < dim; ++col) {
      if ((static_cast<std::size_t>(row) & ~mask) != (static_cast<std::size_t>(col) & ~mask)) {
        continue;
      }
      full(row, col) = op(local(row), local(col));
    }
  }
  return full;
}

Eigen::Matrix4cd procrustean_matrix(Complex r) {
  const Complex s = std::sqrt(std::max(0.0, 1.0 - std::norm(r)));
  Eigen::Matrix4cd m;
  m << r, 0, s, 0,
       0, 1, 0, 0,
       0, 0, 0, -1,
       s, 0, -std::conj(r), 0;
  return m;
}

std::array<OracleBranch, 4> brute_force_tree(Complex alpha, Complex beta, Complex a,
                                             Complex b) {
  Eigen::VectorXcd p12(4), p34(4), anc(2);
  p12 << alpha, 0, 0, beta;
  p34 << a, 0, 0, b;
  anc << 1, 0;
  const Eigen::VectorXcd psi = kron(kron(p12, p34), anc);

  // X on qubit 1 in the (qubit 1, ancilla) basis.
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(1, 0) = flip(0, 1) = flip(3, 2) = flip(2, 3) = 1.0;

  Eigen::Matrix2cd keep0 = Eigen::Matrix2cd::Zero();
  keep0(0, 0) = 1.0;
  Eigen::Matrix2cd keep1 = Eigen::Matrix2cd::Zero();
  keep1(1, 1) = 1.0;
  const Eigen::MatrixXcd anc0 = embed(keep0, {kAncilla}, kQubits);
  const Eigen::MatrixXcd anc1 = embed(keep1, {kAncilla}, kQubits);

  std::array<OracleBranch, 4> out;
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4cd v = bell(k);
    // Targets (3, 2): local index = q3 + 2 q2 = register index of |q2 q3>.
    const Eigen::MatrixXcd proj = embed(v * v.adjoint(), {3, 2}, kQubits);
    const Eigen::VectorXcd projected = proj * psi;
    OracleBranch& br = out[k];
    br.branch_probability = projected.squaredNorm();

    // c(x, y) = <b|_23 projected restricted to |x>_1 |y>_4 |0>_a.
    Complex c[2][2] = {};
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        for (int j = 0; j < 2; ++j) {
          for (int l = 0; l < 2; ++l) {
            const Eigen::Index idx = (x << 4) | (j << 3) | (l << 2) | (y << 1);
            c[x][y] += std::conj(v(2 * j + l)) * projected(idx);
          }
        }
      }
    }
    const bool phi_like = std::norm(c[0][0]) + std::norm(c[1][1]) >=
                          std::norm(c[0][1]) + std::norm(c[1][0]);
    const Complex q0 = phi_like ? c[0][0] : c[0][1];
    const Complex q1 = phi_like ? c[1][1] : c[1][0];

    Eigen::Matrix4cd filter;
    if (std::abs(q0) == 0.0 && std::abs(q1) == 0.0) {
      continue;
    } else if (std::abs(q0) >= std::abs(q1)) {
      Complex r = q1 / q0;
      if (std::abs(r) > 1.0) r /= std::abs(r);
      filter = procrustean_matrix(r);
    } else {
      Complex r = q0 / q1;
      if (std::abs(r) > 1.0) r /= std::abs(r);
      filter = flip * procrustean_matrix(r) * flip;
    }
    const Eigen::VectorXcd filtered = embed(filter, {1, kAncilla}, kQubits) * projected;
    const Eigen::VectorXcd success = anc0 * filtered;
    br.joint_success = success.squaredNorm();
    br.joint_failure = (anc1 * filtered).squaredNorm();

    if (br.joint_success > 1e-14) {
      br.success_state = Eigen::VectorXcd::Zero(4);
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          Complex acc = 0.0;
          for (int j = 0; j < 2; ++j) {
            for (int l = 0; l < 2; ++l) {
              const Eigen::Index idx = (x << 4) | (j << 3) | (l << 2) | (y << 1);
              acc += std::conj(v(2 * j + l)) * success(idx);
            }
          }
          br.success_state(2 * x + y) = acc;
        }
      }
      br.success_state.normalize();
    }
  }
  return out;
}

}  // namespace purify::oracle
