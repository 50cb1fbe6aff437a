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

// wtele: single protocol runs, analytic surface sweeps and the seeded
// verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or range error,
// 3 I/O error. Angles are given in units of pi.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "werner_teleport/error.hpp"
#include "werner_teleport/fidelity.hpp"
#include "werner_teleport/protocol.hpp"
#include "werner_teleport/sweep.hpp"
#include "werner_teleport/verify.hpp"

namespace wt = werner_teleport;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_flag(const std::string& flag, double value, double lo, double hi, bool half_open) {
  const bool ok = half_open ? (value >= lo && value < hi) : (value >= lo && value <= hi);
  if (!ok) {
    std::ostringstream msg;
    msg << flag << ": value " << value << " outside [" << lo << ", " << hi
        << (half_open ? ")" : "]");
    throw UsageError(msg.str());
  }
}

struct RunArgs {
  double alpha = 0.0, beta = 0.0, gamma = 1.0, epsilon = 1.0;
  double chi = 0.0, theta = 0.0, phi = 0.0, psi = 0.0;
};

int cmd_run(const RunArgs& a) {
  check_flag("--alpha", a.alpha, 0.0, 1.0, false);
  check_flag("--beta", a.beta, 0.0, 2.0, true);
  check_flag("--gamma", a.gamma, 0.0, 1.0, false);
  check_flag("--epsilon", a.epsilon, 0.0, 1.0, false);
  check_flag("--chi", a.chi, 0.0, 2.0, true);
  check_flag("--theta", a.theta, 0.0, 1.0, false);
  check_flag("--phi", a.phi, 0.0, 1.0, false);
  check_flag("--psi", a.psi, 0.0, 1.0, false);

  constexpr double pi = std::numbers::pi;
  const wt::InformationState info{a.alpha * pi, a.beta * pi, a.gamma};
  const wt::WernerResource resource{a.epsilon};
  const wt::UnitaryAngles angles{a.chi * pi, a.theta * pi, a.phi * pi, a.psi * pi};

  const auto report = wt::run_protocol(info, resource, angles);
  const double closed = wt::fidelity_closed_form({info.alpha, info.beta, info.gamma,
                                                  resource.epsilon, angles.theta, angles.phi,
                                                  angles.psi});
  std::cout << "outcome probability fidelity\n";
  for (const auto& rec : report.per_outcome) {
    std::cout << rec.r.value() << ' ' << wt::format_number(rec.probability) << ' '
              << wt::format_number(rec.fidelity) << '\n';
  }
  std::cout << "F_sim " << wt::format_number(report.fidelity) << '\n'
            << "F_closed " << wt::format_number(closed) << '\n'
            << "abs_diff " << wt::format_number(std::abs(report.fidelity - closed)) << '\n';
  return kExitOk;
}

struct SweepArgs {
  std::string quantity = "masfi";
  std::string gamma_grid = "0:1:51";
  std::string epsilon_grid = "0:1:51";
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 0;
};

int cmd_sweep(const SweepArgs& a) {
  wt::SweepConfig config;
  auto flagged = [](const std::string& flag, auto&& parse) {
    try {
      return parse();
    } catch (const wt::InvalidArgument& e) {
      throw UsageError(flag + ": " + e.what());
    }
  };
  config.quantity = flagged("--quantity", [&] { return wt::parse_quantity(a.quantity); });
  config.format = flagged("--format", [&] { return wt::parse_format(a.format); });
  config.gamma_grid = flagged("--gamma-grid", [&] {
    auto g = wt::parse_grid(a.gamma_grid);
    g.validate("gamma grid");
    return g;
  });
  config.epsilon_grid = flagged("--epsilon-grid", [&] {
    auto g = wt::parse_grid(a.epsilon_grid);
    g.validate("epsilon grid");
    return g;
  });
  config.output_path = a.out;
  config.seed = a.seed;

  std::ostringstream buffer;
  wt::write_rows(buffer, wt::sweep(config), config.format);
  if (config.output_path.empty()) {
    std::cout << buffer.str();
    return kExitOk;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + config.output_path + "' for writing");
  file << buffer.str();
  file.close();
  if (!file) throw IoError("failed writing '" + config.output_path + "'");
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, std::size_t samples) {
  if (samples == 0) throw UsageError("--samples: must be at least 1");
  wt::VerifyOptions options;
  options.seed = seed;
  options.samples = samples;
  const auto report = wt::run_verification(options);
  for (const auto& c : report.checks) {
    std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << " cases=" << c.cases
              << " max_error=" << wt::format_number(c.max_error)
              << " tolerance=" << wt::format_number(c.tolerance) << '\n';
  }
  if (const auto* sim = report.find("closed_form_vs_simulation")) {
    std::cout << "max |F_sim - F_closed| = " << wt::format_number(sim->max_error) << '\n';
  }
  if (const auto* failed = report.first_failed()) {
    std::cerr << "verification failed: " << failed->name << ": " << failed->first_failure << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Teleportation of a mixed qubit over a Werner-like resource"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Simulate the protocol at one parameter point");
  run->add_option("--alpha", run_args.alpha, "Information polar angle, units of pi [0,1]");
  run->add_option("--beta", run_args.beta, "Information azimuth, units of pi [0,2)");
  run->add_option("--gamma", run_args.gamma, "Information purity parameter [0,1]");
  run->add_option("--epsilon", run_args.epsilon, "Werner mixing weight [0,1]");
  run->add_option("--chi", run_args.chi, "Correction global phase, units of pi [0,2)");
  run->add_option("--theta", run_args.theta, "Correction angle theta, units of pi [0,1]");
  run->add_option("--phi", run_args.phi, "Correction angle phi, units of pi [0,1]");
  run->add_option("--psi", run_args.psi, "Correction angle psi, units of pi [0,1]");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Emit an analytic (gamma, epsilon) surface");
  sweep->add_option("--quantity", sweep_args.quantity, "masfi | favmax | gap | fmax");
  sweep->add_option("--gamma-grid", sweep_args.gamma_grid, "min:max:count");
  sweep->add_option("--epsilon-grid", sweep_args.epsilon_grid, "min:max:count");
  sweep->add_option("--format", sweep_args.format, "csv | jsonl");
  sweep->add_option("--out", sweep_args.out, "Output path (default: stdout)");
  sweep->add_option("--seed", sweep_args.seed, "Seed (recorded; analytic sweeps are exact)");

  std::uint64_t verify_seed = 42;
  std::size_t verify_samples = 10000;
  auto* verify = app.add_subcommand("verify", "Run the seeded cross-check suite");
  verify->add_option("--seed", verify_seed, "Random seed");
  verify->add_option("--samples", verify_samples, "Number of random parameter tuples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_args);
    if (*sweep) return cmd_sweep(sweep_args);
    if (*verify) return cmd_verify(verify_seed, verify_samples);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wt::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
