// Copyright 2026 The werner-teleport Authors
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

// Random generators and independent reference computations shared by the
// test suites. Nothing here calls into the code paths it is used to check.

#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "werner_teleport/density.hpp"

namespace werner_teleport::testing {

inline ComplexMatrix::Storage random_complex(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix::Storage g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

// G G^dagger / Tr, full rank with probability one.
inline ComplexMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  const auto g = random_complex(dim, rng);
  ComplexMatrix::Storage rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return ComplexMatrix(rho);
}

// Q factor of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<ComplexMatrix::Storage> qr(random_complex(dim, rng));
  return ComplexMatrix(ComplexMatrix::Storage(qr.householderQ()));
}

// Tr[rho_T rho_I] for the one-qubit information state rotated by U after a
// depolarizing channel of strength epsilon, computed on Bloch vectors:
//   F = 1/2 (1 + epsilon r . (R r)),  R_ij = 1/2 Tr[s_i U s_j U^dagger].
inline double bloch_fidelity(double alpha, double beta, double gamma, double epsilon,
                             const Eigen::Matrix2cd& u) {
  const Eigen::Vector3d r(gamma * std::sin(alpha) * std::cos(beta),
                          gamma * std::sin(alpha) * std::sin(beta), std::cos(alpha));
  Eigen::Matrix2cd s[3];
  s[0] << 0, 1, 1, 0;
  s[1] << 0, Complex(0, -1), Complex(0, 1), 0;
  s[2] << 1, 0, 0, -1;
  Eigen::Matrix3d rot;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rot(i, j) = 0.5 * (s[i] * u * s[j] * u.adjoint()).trace().real();
  return 0.5 * (1.0 + epsilon * r.dot(rot * r));
}

}  // namespace werner_teleport::testing
