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

// Seeded cross-checks between the density-matrix simulation, the closed
// forms and the numeric searches.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "werner_teleport/fidelity.hpp"

namespace werner_teleport {

struct ProtocolSample {
  InformationState info;
  WernerResource resource;
  UnitaryAngles angles;

  FidelityParameters parameters() const {
    return {info.alpha, info.beta, info.gamma, resource.epsilon, angles.theta, angles.phi,
            angles.psi};
  }
};

// Uniform draw over the full parameter box.
ProtocolSample sample_protocol(std::mt19937_64& rng);

struct CheckResult {
  CheckResult(std::string check_name, double check_tolerance)
      : name(std::move(check_name)), tolerance(check_tolerance) {}

  std::string name;
  double tolerance;
  double max_error = 0.0;
  std::size_t cases = 0;
  // Offending parameter tuple and both compared values, for the first failure.
  std::string first_failure;

  bool passed() const { return first_failure.empty(); }
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  // Closed form under test; replaceable to run negative controls.
  std::function<double(const FidelityParameters&)> closed_form = fidelity_closed_form;
  // Side of the (gamma, epsilon) subgrid used by the quadrature and minimax checks.
  std::size_t subgrid = 5;
  bool include_minimax = true;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  const CheckResult* first_failed() const;
};

// Throws InvalidArgument when samples == 0.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace werner_teleport
