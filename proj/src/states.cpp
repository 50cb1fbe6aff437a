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

#include "werner_teleport/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "werner_teleport/error.hpp"
#include "werner_teleport/ranges.hpp"

namespace werner_teleport {

using std::numbers::pi;

void InformationState::validate() const {
  require_closed("alpha", alpha, 0.0, pi);
  require_half_open("beta", beta, 0.0, 2.0 * pi);
  require_closed("gamma", gamma, 0.0, 1.0);
}

void WernerResource::validate() const { require_closed("epsilon", epsilon, 0.0, 1.0); }

BellIndex::BellIndex(int r) : r_(r) {
  if (r < 0 || r > 3) {
    std::ostringstream msg;
    msg << "BellIndex: r must be in {0,1,2,3} (got " << r << ")";
    throw InvalidArgument(msg.str());
  }
}

DensityMatrix information_state(const InformationState& s) {
  s.validate();
  const double c = std::cos(s.alpha / 2.0);
  const double sn = std::sin(s.alpha / 2.0);
  const Complex off = s.gamma * sn * c * std::polar(1.0, -s.beta);
  return validate_density(ComplexMatrix(2, {c * c, off, std::conj(off), sn * sn}));
}

DensityMatrix werner_state(const WernerResource& w) {
  w.validate();
  const double e = w.epsilon;
  const double diag_outer = (1.0 + e) / 4.0;
  const double diag_inner = (1.0 - e) / 4.0;
  const double corner = e / 2.0;
  return validate_density(ComplexMatrix(4, {diag_outer, 0.0, 0.0, corner,  //
                                            0.0, diag_inner, 0.0, 0.0,     //
                                            0.0, 0.0, diag_inner, 0.0,     //
                                            corner, 0.0, 0.0, diag_outer}));
}

ComplexMatrix information_state_from_ladder(const InformationState& s) {
  s.validate();
  const auto l = ladder_operators();
  const double c = std::cos(s.alpha / 2.0);
  const double sn = std::sin(s.alpha / 2.0);
  const Complex rho01 = s.gamma * sn * c * std::polar(1.0, -s.beta);
  return Complex(c * c) * l.i_plus + Complex(sn * sn) * l.i_minus + rho01 * l.r_plus +
         std::conj(rho01) * l.r_minus;
}

ComplexMatrix werner_state_from_ladder(const WernerResource& w) {
  w.validate();
  const auto l = ladder_operators();
  const double e = w.epsilon;
  return Complex((1.0 + e) / 4.0) * (kron(l.i_plus, l.i_plus) + kron(l.i_minus, l.i_minus)) +
         Complex((1.0 - e) / 4.0) * (kron(l.i_plus, l.i_minus) + kron(l.i_minus, l.i_plus)) +
         Complex(e / 2.0) * (kron(l.r_plus, l.r_plus) + kron(l.r_minus, l.r_minus));
}

DensityMatrix bell_projector(BellIndex r) {
  const double h = 0.5;
  const double sign = (r.value() % 2 == 0) ? 1.0 : -1.0;
  if (r.value() < 2) {
    // Support on |00>, |11>.
    return validate_density(ComplexMatrix(4, {h, 0.0, 0.0, sign * h,  //
                                              0.0, 0.0, 0.0, 0.0,     //
                                              0.0, 0.0, 0.0, 0.0,     //
                                              sign * h, 0.0, 0.0, h}));
  }
  // Support on |01>, |10>.
  return validate_density(ComplexMatrix(4, {0.0, 0.0, 0.0, 0.0,       //
                                            0.0, h, sign * h, 0.0,    //
                                            0.0, sign * h, h, 0.0,    //
                                            0.0, 0.0, 0.0, 0.0}));
}

double concurrence_werner(double epsilon) {
  require_closed("epsilon", epsilon, 0.0, 1.0);
  return std::max(0.0, (3.0 * epsilon - 1.0) / 2.0);
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw InvalidArgument("wootters_concurrence: expected a two-qubit state");
  using Storage = ComplexMatrix::Storage;
  const Storage sy = pauli_y().storage();
  Storage flip(4, 4);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) flip.block(2 * i, 2 * j, 2, 2) = sy(i, j) * sy;
  const Storage& r = rho.matrix().storage();
  const Storage tilde = flip * r.conjugate() * flip;

  // rho * tilde shares its spectrum with sqrt(rho) tilde sqrt(rho), which is
  // Hermitian positive semidefinite.
  Eigen::SelfAdjointEigenSolver<Storage> root_solver(0.5 * (r + r.adjoint()));
  const Eigen::VectorXd clamped = root_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Storage root = root_solver.eigenvectors() * clamped.cast<Complex>().asDiagonal() *
                       root_solver.eigenvectors().adjoint();
  Storage product = root * tilde * root;
  product = 0.5 * (product + product.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Storage> solver(product, Eigen::EigenvaluesOnly);

  std::array<double, 4> lambda{};
  for (Eigen::Index i = 0; i < 4; ++i)
    lambda[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, solver.eigenvalues()(i)));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double purity(const DensityMatrix& rho) {
  return trace_of_product(rho.matrix(), rho.matrix()).real();
}

}  // namespace werner_teleport
