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

#include "werner_teleport/protocol.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "werner_teleport/error.hpp"
#include "werner_teleport/ranges.hpp"

namespace werner_teleport {

using std::numbers::pi;

inline constexpr double kDegenerateProbability = 1e-15;

void UnitaryAngles::validate() const {
  require_half_open("chi", chi, 0.0, 2.0 * pi);
  require_closed("theta", theta, 0.0, pi);
  require_closed("phi", phi, 0.0, pi);
  require_closed("psi", psi, 0.0, pi);
}

ComplexMatrix base_unitary(const UnitaryAngles& a) {
  a.validate();
  const double c = std::cos(a.theta / 2.0);
  const double s = std::sin(a.theta / 2.0);
  const Complex phase = std::polar(1.0, a.chi);
  return phase * ComplexMatrix(2, {c * std::polar(1.0, a.phi), s * std::polar(1.0, a.psi),
                                   -s * std::polar(1.0, -a.psi), c * std::polar(1.0, -a.phi)});
}

ComplexMatrix outcome_pauli(BellIndex r) {
  switch (r.value()) {
    case 0:
      return ComplexMatrix::identity(2);
    case 1:
      return pauli_z();
    case 2:
      return pauli_x();
    default:
      return Complex(0.0, 1.0) * pauli_y();
  }
}

ComplexMatrix correction_unitary(BellIndex r, const UnitaryAngles& angles) {
  return base_unitary(angles) * outcome_pauli(r);
}

DensityMatrix composite(const DensityMatrix& info, const DensityMatrix& resource) {
  if (info.dim() != 2 || resource.dim() != 4) {
    throw InvalidArgument("composite: expected a one-qubit information state and a two-qubit resource");
  }
  return validate_density(kron(info.matrix(), resource.matrix()));
}

BsmOutcome bsm_project(const DensityMatrix& composite_state, BellIndex r) {
  if (composite_state.dim() != 8) throw InvalidArgument("bsm_project: expected a three-qubit state");
  const auto projector = kron(bell_projector(r).matrix(), ComplexMatrix::identity(2));
  const auto projected = projector * composite_state.matrix() * projector;
  const double probability = projected.trace().real();
  if (!(probability >= kDegenerateProbability)) {
    std::ostringstream msg;
    msg << "bsm_project: outcome " << r.value() << " has probability " << probability;
    throw DegenerateOutcome(msg.str());
  }
  auto bob = partial_trace(projected, {2});
  bob = Complex(1.0 / probability) * bob;
  bob = Complex(0.5) * (bob + bob.adjoint());
  return {r, probability, validate_density(bob)};
}

ComplexMatrix conditional_state_closed_form(const DensityMatrix& info, double epsilon,
                                            BellIndex r) {
  if (info.dim() != 2) throw InvalidArgument("conditional_state_closed_form: expected one qubit");
  require_closed("epsilon", epsilon, 0.0, 1.0);
  const auto l = ladder_operators();
  const double rho00 = info(0, 0).real();
  const double rho11 = info(1, 1).real();
  const Complex rho01 = info(0, 1);
  const Complex rho10 = info(1, 0);
  const double e = epsilon;
  const double kept = rho00 * (1.0 + e) + rho11 * (1.0 - e);
  const double flipped = rho00 * (1.0 - e) + rho11 * (1.0 + e);

  ComplexMatrix sum = ComplexMatrix::zero(2);
  switch (r.value()) {
    case 0:
      sum = Complex(kept) * l.i_plus + Complex(flipped) * l.i_minus +
            (2.0 * e * rho01) * l.r_plus + (2.0 * e * rho10) * l.r_minus;
      break;
    case 1:
      sum = Complex(kept) * l.i_plus + Complex(flipped) * l.i_minus -
            (2.0 * e * rho01) * l.r_plus - (2.0 * e * rho10) * l.r_minus;
      break;
    case 2:
      sum = Complex(flipped) * l.i_plus + Complex(kept) * l.i_minus +
            (2.0 * e * rho10) * l.r_plus + (2.0 * e * rho01) * l.r_minus;
      break;
    default:
      sum = Complex(flipped) * l.i_plus + Complex(kept) * l.i_minus -
            (2.0 * e * rho10) * l.r_plus - (2.0 * e * rho01) * l.r_minus;
      break;
  }
  return Complex(0.5) * sum;
}

FidelityReport run_protocol(const InformationState& info, const WernerResource& resource,
                            const UnitaryAngles& angles) {
  angles.validate();
  const DensityMatrix rho_info = information_state(info);
  const DensityMatrix state = composite(rho_info, werner_state(resource));

  auto branch = [&](BellIndex r) {
    BsmOutcome outcome = bsm_project(state, r);
    DensityMatrix teleported = conjugate(correction_unitary(r, angles), outcome.bob_state);
    const double f = trace_of_product(teleported.matrix(), rho_info.matrix()).real();
    return OutcomeRecord{r, outcome.probability, std::move(outcome.bob_state),
                         std::move(teleported), f};
  };
  const auto& rs = all_bell_indices();
  FidelityReport report{{branch(rs[0]), branch(rs[1]), branch(rs[2]), branch(rs[3])}, 0.0};
  for (const auto& rec : report.per_outcome) report.fidelity += rec.probability * rec.fidelity;
  return report;
}

}  // namespace werner_teleport
