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

// Parametrized input states, the Werner-like resource, the Bell basis and
// entanglement diagnostics.

#pragma once

#include <array>
#include <numbers>

#include "werner_teleport/density.hpp"

namespace werner_teleport {

// Single-qubit mixed state
//   rho_00 = cos^2(alpha/2), rho_11 = sin^2(alpha/2),
//   rho_01 = gamma sin(alpha/2) cos(alpha/2) exp(-i beta) = conj(rho_10).
// alpha in [0, pi], beta in [0, 2 pi), gamma in [0, 1]. gamma = 1 is pure;
// gamma = 0 is fully dephased in the computational basis.
struct InformationState {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 1.0;

  // Throws InvalidArgument naming the offending field.
  void validate() const;
};

// (1 - epsilon)/4 * I + epsilon |phi+><phi+|, epsilon in [0, 1].
struct WernerResource {
  double epsilon = 1.0;

  void validate() const;
};

// Index of a Bell state:
//   0: (|00> + |11>)/sqrt2   1: (|00> - |11>)/sqrt2
//   2: (|01> + |10>)/sqrt2   3: (|01> - |10>)/sqrt2
class BellIndex {
 public:
  explicit BellIndex(int r);
  int value() const noexcept { return r_; }
  friend bool operator==(BellIndex, BellIndex) = default;

 private:
  int r_;
};

inline const std::array<BellIndex, 4>& all_bell_indices() {
  static const std::array<BellIndex, 4> kAll{BellIndex(0), BellIndex(1), BellIndex(2),
                                             BellIndex(3)};
  return kAll;
}

DensityMatrix information_state(const InformationState& s);
DensityMatrix werner_state(const WernerResource& w);

// The same matrices assembled from the ladder basis {I+, I-, R+, R-}:
//   rho_I = rho_00 I+ + rho_11 I- + rho_01 R+ + rho_10 R-
//   rho_W = (1+eps)/4 (I+I+ + I-I-) + (1-eps)/4 (I+I- + I-I+) + eps/2 (R+R+ + R-R-)
// where products of two operators denote tensor products. Unvalidated.
ComplexMatrix information_state_from_ladder(const InformationState& s);
ComplexMatrix werner_state_from_ladder(const WernerResource& w);

DensityMatrix bell_projector(BellIndex r);

// max{0, (3 eps - 1)/2}. Throws InvalidArgument outside [0, 1].
double concurrence_werner(double epsilon);

// Hill-Wootters concurrence of a two-qubit state: max{0, l1 - l2 - l3 - l4}
// where l_i are the decreasing square roots of the eigenvalues of
// rho (sy x sy) conj(rho) (sy x sy).
double wootters_concurrence(const DensityMatrix& rho);

// Tr[rho^2].
double purity(const DensityMatrix& rho);

}  // namespace werner_teleport
