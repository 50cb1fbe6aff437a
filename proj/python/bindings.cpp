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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "werner_teleport/error.hpp"
#include "werner_teleport/fidelity.hpp"
#include "werner_teleport/protocol.hpp"
#include "werner_teleport/states.hpp"
#include "werner_teleport/sweep.hpp"
#include "werner_teleport/verify.hpp"

namespace py = pybind11;
namespace wt = werner_teleport;

namespace {

Eigen::MatrixXcd as_array(const wt::DensityMatrix& rho) { return rho.matrix().storage(); }

wt::DensityMatrix to_density(const Eigen::MatrixXcd& m) {
  return wt::validate_density(wt::ComplexMatrix(m));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Teleportation of a mixed qubit over a Werner-like resource";

  py::register_exception<wt::InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<wt::DensityError>(m, "DensityError", PyExc_ValueError);
  py::register_exception<wt::DegenerateOutcome>(m, "DegenerateOutcome", PyExc_ArithmeticError);

  py::class_<wt::InformationState>(m, "InformationState")
      .def(py::init([](double alpha, double beta, double gamma) {
             return wt::InformationState{alpha, beta, gamma};
           }),
           py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("gamma") = 1.0)
      .def_readwrite("alpha", &wt::InformationState::alpha)
      .def_readwrite("beta", &wt::InformationState::beta)
      .def_readwrite("gamma", &wt::InformationState::gamma);

  py::class_<wt::WernerResource>(m, "WernerResource")
      .def(py::init([](double epsilon) { return wt::WernerResource{epsilon}; }),
           py::arg("epsilon") = 1.0)
      .def_readwrite("epsilon", &wt::WernerResource::epsilon);

  py::class_<wt::UnitaryAngles>(m, "UnitaryAngles")
      .def(py::init([](double chi, double theta, double phi, double psi) {
             return wt::UnitaryAngles{chi, theta, phi, psi};
           }),
           py::arg("chi") = 0.0, py::arg("theta") = 0.0, py::arg("phi") = 0.0,
           py::arg("psi") = 0.0)
      .def_readwrite("chi", &wt::UnitaryAngles::chi)
      .def_readwrite("theta", &wt::UnitaryAngles::theta)
      .def_readwrite("phi", &wt::UnitaryAngles::phi)
      .def_readwrite("psi", &wt::UnitaryAngles::psi);

  m.def("information_state", [](const wt::InformationState& s) {
    return as_array(wt::information_state(s));
  });
  m.def("werner_state", [](double epsilon) { return as_array(wt::werner_state({epsilon})); },
        py::arg("epsilon"));
  m.def("bell_projector", [](int r) { return as_array(wt::bell_projector(wt::BellIndex(r))); },
        py::arg("r"));
  m.def("concurrence_werner", &wt::concurrence_werner, py::arg("epsilon"));
  m.def("wootters_concurrence",
        [](const Eigen::MatrixXcd& rho) { return wt::wootters_concurrence(to_density(rho)); },
        py::arg("rho"));
  m.def("purity", [](const Eigen::MatrixXcd& rho) { return wt::purity(to_density(rho)); },
        py::arg("rho"));
  m.def("correction_unitary",
        [](int r, const wt::UnitaryAngles& a) {
          return wt::correction_unitary(wt::BellIndex(r), a).storage();
        },
        py::arg("r"), py::arg("angles"));

  py::class_<wt::OutcomeRecord>(m, "OutcomeRecord")
      .def_property_readonly("r", [](const wt::OutcomeRecord& o) { return o.r.value(); })
      .def_readonly("probability", &wt::OutcomeRecord::probability)
      .def_readonly("fidelity", &wt::OutcomeRecord::fidelity)
      .def_property_readonly("bob_state",
                             [](const wt::OutcomeRecord& o) { return as_array(o.bob_state); })
      .def_property_readonly(
          "teleported_state", [](const wt::OutcomeRecord& o) { return as_array(o.teleported_state); });

  py::class_<wt::FidelityReport>(m, "FidelityReport")
      .def_readonly("per_outcome", &wt::FidelityReport::per_outcome)
      .def_readonly("fidelity", &wt::FidelityReport::fidelity);

  m.def("run_protocol", &wt::run_protocol, py::arg("info"), py::arg("resource"),
        py::arg("angles"));

  m.def("fidelity_closed_form",
        [](double alpha, double beta, double gamma, double epsilon, double theta, double phi,
           double psi) {
          return wt::fidelity_closed_form({alpha, beta, gamma, epsilon, theta, phi, psi});
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("epsilon"),
        py::arg("theta"), py::arg("phi"), py::arg("psi"));
  m.def("masfi", &wt::masfi, py::arg("gamma"), py::arg("epsilon"));
  m.def("f_max", &wt::f_max, py::arg("epsilon"));
  m.def("f_av_max", &wt::f_av_max, py::arg("gamma"), py::arg("epsilon"));
  m.def("fidelity_gap", &wt::fidelity_gap, py::arg("gamma"), py::arg("epsilon"));
  m.def("classical_threshold", [](double gamma) {
    const auto t = wt::classical_threshold(gamma);
    py::dict d;
    d["favmax_epsilon"] = t.favmax_epsilon;
    d["masfi_epsilon"] = t.masfi_epsilon;
    d["masfi_attainable"] = t.masfi_attainable;
    return d;
  }, py::arg("gamma"));
  m.def("average_fidelity_numeric", &wt::average_fidelity_numeric, py::arg("gamma"),
        py::arg("epsilon"), py::arg("angles"), py::arg("nodes") = 64);
  m.def("min_over_information",
        [](double gamma, double epsilon, const wt::UnitaryAngles& a, std::size_t grid) {
          const auto r = wt::min_over_information(gamma, epsilon, a, grid);
          return py::make_tuple(r.value, r.alpha, r.beta);
        },
        py::arg("gamma"), py::arg("epsilon"), py::arg("angles"), py::arg("grid") = 33);

  py::class_<wt::MinimaxResult>(m, "MinimaxResult")
      .def_readonly("value", &wt::MinimaxResult::value)
      .def_readonly("alpha", &wt::MinimaxResult::alpha)
      .def_readonly("beta", &wt::MinimaxResult::beta)
      .def_readonly("theta", &wt::MinimaxResult::theta)
      .def_readonly("phi", &wt::MinimaxResult::phi)
      .def_readonly("psi", &wt::MinimaxResult::psi)
      .def_readonly("iterations", &wt::MinimaxResult::iterations)
      .def_readonly("tolerance_achieved", &wt::MinimaxResult::tolerance_achieved);
  m.def("minimax_search",
        [](double gamma, double epsilon, std::size_t outer_grid, unsigned threads) {
          wt::MinimaxOptions options;
          options.outer_grid = outer_grid;
          options.threads = threads;
          py::gil_scoped_release release;
          return wt::minimax_search(gamma, epsilon, options);
        },
        py::arg("gamma"), py::arg("epsilon"), py::arg("outer_grid") = 33,
        py::arg("threads") = 0);

  m.def("sweep",
        [](const std::string& quantity, std::tuple<double, double, std::size_t> gamma_grid,
           std::tuple<double, double, std::size_t> epsilon_grid) {
          wt::SweepConfig config;
          config.quantity = wt::parse_quantity(quantity);
          config.gamma_grid = {std::get<0>(gamma_grid), std::get<1>(gamma_grid),
                               std::get<2>(gamma_grid)};
          config.epsilon_grid = {std::get<0>(epsilon_grid), std::get<1>(epsilon_grid),
                                 std::get<2>(epsilon_grid)};
          std::vector<std::tuple<double, double, double>> out;
          for (const auto& row : wt::sweep(config)) out.emplace_back(row.gamma, row.epsilon, row.value);
          return out;
        },
        py::arg("quantity"), py::arg("gamma_grid") = std::make_tuple(0.0, 1.0, std::size_t{51}),
        py::arg("epsilon_grid") = std::make_tuple(0.0, 1.0, std::size_t{51}));

  m.def("verify",
        [](std::uint64_t seed, std::size_t samples, bool include_minimax) {
          wt::VerifyOptions options;
          options.seed = seed;
          options.samples = samples;
          options.include_minimax = include_minimax;
          wt::VerifyReport report;
          {
            py::gil_scoped_release release;
            report = wt::run_verification(options);
          }
          py::dict out;
          for (const auto& c : report.checks) {
            py::dict entry;
            entry["passed"] = c.passed();
            entry["max_error"] = c.max_error;
            entry["tolerance"] = c.tolerance;
            entry["cases"] = c.cases;
            entry["first_failure"] = c.first_failure;
            out[py::str(c.name)] = entry;
          }
          return out;
        },
        py::arg("seed") = 42, py::arg("samples") = 1000, py::arg("include_minimax") = false);
}
