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

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "test_support.hpp"
#include "werner_teleport/error.hpp"
#include "werner_teleport/protocol.hpp"
#include "werner_teleport/verify.hpp"

using namespace werner_teleport;
using std::numbers::pi;

TEST_SUITE("protocol") {
  TEST_CASE("composite of pure inputs is pure and has the information marginal") {
    const auto info = information_state({1.1, 0.4, 1.0});
    const auto c = composite(info, werner_state({1.0}));
    CHECK(c.dim() == 8);
    CHECK(purity(c) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(partial_trace(c, {0}).matrix().max_abs_diff(info.matrix()) < 1e-15);
  }

  TEST_CASE("composite trace and marginals for mixed inputs") {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 20; ++n) {
      const auto s = sample_protocol(rng);
      const auto info = information_state(s.info);
      const auto resource = werner_state(s.resource);
      const auto c = composite(info, resource);
      CHECK(std::abs(c.matrix().trace() - 1.0) < 1e-12);
      CHECK(partial_trace(c, {0}).matrix().max_abs_diff(info.matrix()) < 1e-14);
      CHECK(partial_trace(c, {1, 2}).matrix().max_abs_diff(resource.matrix()) < 1e-14);
    }
  }

  TEST_CASE("composite rejects wrong subsystem sizes") {
    const auto q = information_state({0.5, 0.0, 1.0});
    CHECK_THROWS_AS(composite(q, q), InvalidArgument);
    CHECK_THROWS_AS(composite(werner_state({0.5}), werner_state({0.5})), InvalidArgument);
  }

  TEST_CASE("ideal channel, identity branch returns the input") {
    const InformationState s{0.9, 2.5, 0.6};
    const auto info = information_state(s);
    const auto out = bsm_project(composite(info, werner_state({1.0})), BellIndex(0));
    CHECK(out.probability == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(out.bob_state.matrix().max_abs_diff(info.matrix()) < 1e-14);
  }

  TEST_CASE("fully mixed resource leaves Bob maximally mixed") {
    const auto c = composite(information_state({2.1, 5.0, 0.8}), werner_state({0.0}));
    for (auto r : all_bell_indices()) {
      const auto out = bsm_project(c, r);
      CHECK(out.bob_state.matrix().max_abs_diff(Complex(0.5) * ComplexMatrix::identity(2)) < 1e-15);
    }
  }

  TEST_CASE("pole input, epsilon 0.5, branch 0 gives diag(0.75, 0.25)") {
    for (double gamma : {0.0, 0.4, 1.0}) {
      const auto c = composite(information_state({0.0, 0.0, gamma}), werner_state({0.5}));
      const auto out = bsm_project(c, BellIndex(0));
      CHECK(out.bob_state.matrix().max_abs_diff(ComplexMatrix(2, {0.75, 0.0, 0.0, 0.25})) < 1e-15);
    }
  }

  TEST_CASE("hand-built composite with an empty branch is a degenerate outcome") {
    ComplexMatrix::Storage m = ComplexMatrix::Storage::Zero(8, 8);
    m(0, 0) = 1.0;  // |000>
    const auto c = validate_density(ComplexMatrix(m));
    CHECK_THROWS_AS(bsm_project(c, BellIndex(2)), DegenerateOutcome);
    CHECK_NOTHROW(bsm_project(c, BellIndex(0)));
    CHECK_THROWS_AS(bsm_project(werner_state({0.5}), BellIndex(0)), InvalidArgument);
  }

  TEST_CASE("correction unitaries") {
    const UnitaryAngles zero{};
    CHECK(correction_unitary(BellIndex(0), zero).max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
    CHECK(correction_unitary(BellIndex(1), zero).max_abs_diff(pauli_z()) == 0.0);
    CHECK(correction_unitary(BellIndex(2), zero).max_abs_diff(pauli_x()) == 0.0);
    CHECK(correction_unitary(BellIndex(3), zero)
              .max_abs_diff(ComplexMatrix(2, {0.0, 1.0, -1.0, 0.0})) == 0.0);

    std::mt19937_64 rng(21);
    for (int n = 0; n < 200; ++n) {
      const auto a = sample_protocol(rng).angles;
      for (auto r : all_bell_indices()) {
        const auto u = correction_unitary(r, a);
        CHECK((u * u.adjoint()).max_abs_diff(ComplexMatrix::identity(2)) < 1e-12);
      }
    }
  }

  TEST_CASE("unitary angles are range checked") {
    CHECK_THROWS_AS(base_unitary({2 * pi, 0, 0, 0}), InvalidArgument);
    CHECK_THROWS_AS(base_unitary({0, pi + 1e-9, 0, 0}), InvalidArgument);
    CHECK_THROWS_AS(base_unitary({0, 0, -1e-9, 0}), InvalidArgument);
    CHECK_THROWS_AS(base_unitary({0, 0, 0, 4.0}), InvalidArgument);
  }

  TEST_CASE("ideal pure teleportation has unit fidelity") {
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const auto report = run_protocol({pi * a / 8, 2 * pi * b / 8, 1.0}, {1.0}, {});
        for (const auto& rec : report.per_outcome) {
          CHECK(rec.fidelity == doctest::Approx(1.0).epsilon(1e-13));
          CHECK(rec.probability == doctest::Approx(0.25).epsilon(1e-14));
        }
      }
  }

  TEST_CASE("useless resource gives fidelity one half") {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 100; ++n) {
      auto s = sample_protocol(rng);
      s.resource.epsilon = 0.0;
      CHECK(std::abs(run_protocol(s.info, s.resource, s.angles).fidelity - 0.5) < 1e-14);
    }
  }

  TEST_CASE("randomized protocol invariants") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int n = 0; n < 1000; ++n) {
      const auto s = sample_protocol(rng);
      const auto info = information_state(s.info);
      const auto report = run_protocol(s.info, s.resource, s.angles);
      double total = 0.0;
      const auto& bob0 = report.per_outcome[0].bob_state.matrix();
      for (const auto& rec : report.per_outcome) {
        total += rec.probability;
        CHECK(std::abs(rec.probability - 0.25) < 1e-12);
        const auto sigma = outcome_pauli(rec.r);
        CHECK(rec.bob_state.matrix().max_abs_diff(sigma * bob0 * sigma.adjoint()) < 1e-12);
        CHECK(rec.bob_state.matrix().max_abs_diff(
                  conditional_state_closed_form(info, s.resource.epsilon, rec.r)) < 1e-12);
        CHECK(std::abs(rec.fidelity - report.per_outcome[0].fidelity) < 1e-12);
      }
      CHECK(std::abs(total - 1.0) < 1e-12);
      CHECK(std::abs(report.fidelity - report.per_outcome[0].fidelity) < 1e-12);

      // Bloch-vector route through the SO(3) image of U0.
      const Eigen::Matrix2cd u = base_unitary(s.angles).storage();
      const double bloch = testing::bloch_fidelity(s.info.alpha, s.info.beta, s.info.gamma,
                                                   s.resource.epsilon, u);
      CHECK(std::abs(report.fidelity - bloch) < 1e-12);
    }
  }

  TEST_CASE("fidelity is invariant under the global phase chi") {
    std::mt19937_64 rng(77);
    for (int n = 0; n < 200; ++n) {
      auto s = sample_protocol(rng);
      s.angles.chi = 0.0;
      const double f0 = run_protocol(s.info, s.resource, s.angles).fidelity;
      for (double chi : {0.3, 1.7, 3.1, 6.2}) {
        s.angles.chi = chi;
        CHECK(std::abs(run_protocol(s.info, s.resource, s.angles).fidelity - f0) < 1e-14);
      }
    }
  }
}
