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

#include "werner_teleport/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "werner_teleport/error.hpp"
#include "werner_teleport/sweep.hpp"

namespace werner_teleport {
namespace {

using std::numbers::pi;

std::string describe(const ProtocolSample& s) {
  std::ostringstream out;
  out << std::setprecision(17) << "alpha=" << s.info.alpha << " beta=" << s.info.beta
      << " gamma=" << s.info.gamma << " epsilon=" << s.resource.epsilon << " chi=" << s.angles.chi
      << " theta=" << s.angles.theta << " phi=" << s.angles.phi << " psi=" << s.angles.psi;
  return out.str();
}

std::string describe(double gamma, double epsilon) {
  std::ostringstream out;
  out << std::setprecision(17) << "gamma=" << gamma << " epsilon=" << epsilon;
  return out.str();
}

// Accumulates one named check; keeps the first failing case.
void record(CheckResult& check, double error, double lhs, double rhs,
            const std::function<std::string()>& where) {
  ++check.cases;
  if (!(error <= check.max_error))
    check.max_error = std::isnan(error) ? std::numeric_limits<double>::infinity() : error;
  if (!(error <= check.tolerance) && check.first_failure.empty()) {
    std::ostringstream out;
    out << std::setprecision(17) << where() << ": " << lhs << " vs " << rhs << " (error "
        << error << ", tolerance " << check.tolerance << ")";
    check.first_failure = out.str();
  }
}

}  // namespace

ProtocolSample sample_protocol(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> half_turn(0.0, pi);
  std::uniform_real_distribution<double> full_turn(0.0, 2.0 * pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ProtocolSample s;
  s.info.alpha = half_turn(rng);
  s.info.beta = full_turn(rng);
  s.info.gamma = unit(rng);
  s.resource.epsilon = unit(rng);
  s.angles.chi = full_turn(rng);
  s.angles.theta = half_turn(rng);
  s.angles.phi = half_turn(rng);
  s.angles.psi = half_turn(rng);
  return s;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const CheckResult* VerifyReport::first_failed() const {
  for (const auto& c : checks)
    if (!c.passed()) return &c;
  return nullptr;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.samples == 0) throw InvalidArgument("samples must be at least 1");

  CheckResult closed_vs_sim{"closed_form_vs_simulation", 1e-10};
  CheckResult probabilities{"outcome_probabilities", 1e-12};
  CheckResult probability_sum{"probability_sum", 1e-12};
  CheckResult conditional{"conditional_state_entries", 1e-12};
  CheckResult conjugation{"sigma_conjugation", 1e-12};
  CheckResult independence{"outcome_independence", 1e-12};
  CheckResult chi_invariance{"chi_invariance", 1e-14};
  CheckResult ordering{"ordering_chain", 1e-15};

  std::mt19937_64 rng(options.seed);
  for (std::size_t n = 0; n < options.samples; ++n) {
    const ProtocolSample s = sample_protocol(rng);
    const auto where = [&] { return describe(s); };
    const auto report = run_protocol(s.info, s.resource, s.angles);
    const double closed = options.closed_form(s.parameters());
    record(closed_vs_sim, std::abs(report.fidelity - closed), report.fidelity, closed, where);

    const DensityMatrix rho_info = information_state(s.info);
    const auto& bob0 = report.per_outcome[0].bob_state.matrix();
    double sum = 0.0;
    for (const auto& rec : report.per_outcome) {
      sum += rec.probability;
      record(probabilities, std::abs(rec.probability - 0.25), rec.probability, 0.25, where);
      const auto printed = conditional_state_closed_form(rho_info, s.resource.epsilon, rec.r);
      record(conditional, rec.bob_state.matrix().max_abs_diff(printed), 0.0, 0.0, where);
      const auto sigma = outcome_pauli(rec.r);
      const auto rotated = sigma * bob0 * sigma.adjoint();
      record(conjugation, rec.bob_state.matrix().max_abs_diff(rotated), 0.0, 0.0, where);
      const double f0 = report.per_outcome[0].fidelity;
      record(independence, std::abs(rec.fidelity - f0), rec.fidelity, f0, where);
    }
    record(probability_sum, std::abs(sum - 1.0), sum, 1.0, where);

    UnitaryAngles shifted = s.angles;
    shifted.chi = std::fmod(s.angles.chi + 1.0, 2.0 * pi);
    const double f_shifted = run_protocol(s.info, s.resource, shifted).fidelity;
    record(chi_invariance, std::abs(f_shifted - report.fidelity), f_shifted, report.fidelity,
           where);

    const double g = s.info.gamma;
    const double e = s.resource.epsilon;
    const double lo = masfi(g, e);
    const double mid = f_av_max(g, e);
    const double hi = f_max(e);
    const double violation =
        std::max({lo - mid, mid - hi, 0.5 - lo, 0.5 - mid, 0.0});
    record(ordering, violation, lo, mid, where);
  }

  VerifyReport report;
  report.checks = {closed_vs_sim, probabilities, probability_sum, conditional,
                   conjugation,   independence,  chi_invariance,  ordering};

  GridSpec axis{0.0, 1.0, options.subgrid};
  axis.validate("verification subgrid");
  CheckResult quadrature{"quadrature_vs_favmax", 1e-8};
  CheckResult minimax{"minimax_vs_masfi", 1e-6};
  for (double g : axis.points()) {
    for (double e : axis.points()) {
      const auto where = [&] { return describe(g, e); };
      const double avg = average_fidelity_numeric(g, e, UnitaryAngles{}, 64);
      const double expected_avg = f_av_max(g, e);
      record(quadrature, std::abs(avg - expected_avg), avg, expected_avg, where);
      if (options.include_minimax) {
        const double found = minimax_search(g, e).value;
        const double expected = masfi(g, e);
        record(minimax, std::abs(found - expected), found, expected, where);
      }
    }
  }
  report.checks.push_back(quadrature);
  if (options.include_minimax) report.checks.push_back(minimax);
  return report;
}

}  // namespace werner_teleport
