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

// Closed-form teleportation fidelity and its extremal values, together with
// the numeric searches and Bloch-sphere quadrature that reproduce them
// independently of the closed forms for MASFI, F_max and F_av.max.
//
// Fidelity is the trace overlap Tr[rho_T rho_I] throughout.

#pragma once

#include <cstddef>

#include "werner_teleport/protocol.hpp"

namespace werner_teleport {

inline constexpr double kClassicalFidelity = 2.0 / 3.0;

struct FidelityParameters {
  double alpha = 0.0;    // [0, pi]
  double beta = 0.0;     // [0, 2 pi)
  double gamma = 1.0;    // [0, 1]
  double epsilon = 1.0;  // [0, 1]
  double theta = 0.0;    // [0, pi]
  double phi = 0.0;      // [0, pi]
  double psi = 0.0;      // [0, pi]

  void validate() const;
};

// F = 1/2 [ 1 + e cos(t) cos^2(a)
//           + g e sin(t) sin(2a) sin(f) sin(b + p)
//           + g^2 e cos^2(t/2) cos(2f) sin^2(a)
//           - g^2 e sin^2(t/2) sin^2(a) cos(2(b + p)) ]
double fidelity_closed_form(const FidelityParameters& p);

// Minimum assured fidelity 1/2 (1 + gamma^2 epsilon).
double masfi(double gamma, double epsilon);
// 1/2 (1 + epsilon).
double f_max(double epsilon);
// 1/2 + epsilon (1 + 2 gamma^2) / 6.
double f_av_max(double gamma, double epsilon);
// (1 - gamma^2) epsilon / 6, which equals f_av_max - masfi.
double fidelity_gap(double gamma, double epsilon);

struct ClassicalThresholds {
  // f_av_max exceeds 2/3 for epsilon above 1/(1 + 2 gamma^2).
  double favmax_epsilon;
  // masfi reaches 2/3 at epsilon = 1/(3 gamma^2); +inf at gamma = 0.
  double masfi_epsilon;
  // masfi_epsilon <= 1.
  bool masfi_attainable;
};

ClassicalThresholds classical_threshold(double gamma);

// Uniform Bloch-sphere average of the closed form at fixed gamma:
// Gauss-Legendre with `nodes` points in cos(alpha) times a trapezoid rule
// with 2*nodes points in beta. chi is ignored. nodes >= 8.
double average_fidelity_numeric(double gamma, double epsilon, const UnitaryAngles& angles,
                                std::size_t nodes = 64);

struct InformationMinimum {
  double value;
  double alpha;
  double beta;
};

// Minimum of the closed form over (alpha, beta) at fixed gamma, epsilon and
// correction angles. A grid x grid scan (alpha inclusive on [0, pi], beta on
// [0, 2 pi)) picks the lexicographically first best cell, then coordinate-wise
// golden-section refinement runs to a 1e-9 bracket. grid >= 32.
InformationMinimum min_over_information(double gamma, double epsilon, const UnitaryAngles& angles,
                                        std::size_t grid = 33);

struct MinimaxOptions {
  std::size_t outer_grid = 33;  // points per axis over [0, pi] for theta, phi, psi
  std::size_t inner_grid = 33;
  double bracket_tolerance = 1e-9;
  unsigned threads = 0;  // 0 picks hardware concurrency
};

struct MinimaxResult {
  double value;
  double alpha;  // argmin over the information state
  double beta;
  double theta;  // argmax over the correction
  double phi;
  double psi;
  std::size_t iterations;  // inner minimizations performed
  double tolerance_achieved;
};

// max over (theta, phi, psi) of min over (alpha, beta) of the closed form.
// Ties resolve to the lexicographically smallest (theta, phi, psi).
// Reduction order is fixed, so the result does not depend on `threads`.
MinimaxResult minimax_search(double gamma, double epsilon, const MinimaxOptions& options = {});

struct MaximumResult {
  double value;
  double theta;
  double phi;
  double alpha;
};

// Unconstrained maximum of the closed form over (theta, phi, alpha) with
// beta, psi held fixed: grid^3 scan plus golden-section refinement.
MaximumResult max_fidelity_search(double gamma, double epsilon, double beta, double psi,
                                  std::size_t grid = 33);

}  // namespace werner_teleport
