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

// End-to-end teleportation of one qubit over the Werner-like resource.
//
// Register layout (big-endian): qubit 0 carries the information state,
// qubits 1 and 2 hold the resource. Alice measures qubits 0 and 1 in the
// Bell basis; qubit 2 is Bob's. All four measurement branches are computed
// deterministically.

#pragma once

#include <array>

#include "werner_teleport/density.hpp"
#include "werner_teleport/states.hpp"

namespace werner_teleport {

// Bob's base correction
//   U0 = e^{i chi} [[ cos(theta/2) e^{i phi},   sin(theta/2) e^{i psi} ],
//                   [ -sin(theta/2) e^{-i psi}, cos(theta/2) e^{-i phi} ]]
// with chi in [0, 2 pi) and theta, phi, psi in [0, pi].
struct UnitaryAngles {
  double chi = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;

  void validate() const;
};

ComplexMatrix base_unitary(const UnitaryAngles& angles);

// I, sigma_z, sigma_x, i sigma_y for r = 0..3.
ComplexMatrix outcome_pauli(BellIndex r);

// U_r = U0 * outcome_pauli(r).
ComplexMatrix correction_unitary(BellIndex r, const UnitaryAngles& angles);

struct BsmOutcome {
  BellIndex r;
  double probability;
  DensityMatrix bob_state;
};

// info (x) resource; info must be one qubit and resource two.
DensityMatrix composite(const DensityMatrix& info, const DensityMatrix& resource);

// Projects qubits 0,1 of a three-qubit composite onto Bell state r.
// Throws DegenerateOutcome when the branch probability is below 1e-15.
BsmOutcome bsm_project(const DensityMatrix& composite_state, BellIndex r);

// Bob's normalized conditional state written out explicitly in terms of the
// information-state entries and epsilon. The branch r=0 is
//   1/2 [ {rho00(1+e) + rho11(1-e)} I+ + {rho00(1-e) + rho11(1+e)} I-
//         + 2 e rho01 R+ + 2 e rho10 R- ];
// the other branches are sigma_r conjugates of it.
ComplexMatrix conditional_state_closed_form(const DensityMatrix& info, double epsilon,
                                            BellIndex r);

struct OutcomeRecord {
  BellIndex r;
  double probability;
  DensityMatrix bob_state;
  DensityMatrix teleported_state;
  double fidelity;  // Tr[teleported * info]
};

struct FidelityReport {
  std::array<OutcomeRecord, 4> per_outcome;
  // Probability-weighted mean of the per-outcome fidelities. With
  // U_r = U0 sigma_r all four coincide, so this is the common value.
  double fidelity;
};

FidelityReport run_protocol(const InformationState& info, const WernerResource& resource,
                            const UnitaryAngles& angles);

}  // namespace werner_teleport
