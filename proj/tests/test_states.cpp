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

#include <doctest.h>

#include "werner_teleport/error.hpp"
#include "werner_teleport/states.hpp"

using namespace werner_teleport;
using std::numbers::pi;

TEST_SUITE("states") {
  TEST_CASE("information state at the pole is |0><0|") {
    const auto rho = information_state({0.0, 0.0, 1.0});
    CHECK(rho.matrix().max_abs_diff(ComplexMatrix(2, {1.0, 0.0, 0.0, 0.0})) < 1e-16);
  }

  TEST_CASE("information state on the equator") {
    const auto plus = information_state({pi / 2, 0.0, 1.0});
    CHECK(plus.matrix().max_abs_diff(ComplexMatrix(2, {0.5, 0.5, 0.5, 0.5})) < 1e-15);

    const Complex i{0.0, 1.0};
    const auto mixed = information_state({pi / 2, pi / 2, 0.5});
    CHECK(mixed.matrix().max_abs_diff(ComplexMatrix(2, {0.5, -0.25 * i, 0.25 * i, 0.5})) < 1e-15);
  }

  TEST_CASE("information state at alpha in {0, pi} ignores beta") {
    for (double beta : {0.0, 1.0, 4.0}) {
      CHECK(information_state({0.0, beta, 0.3}).matrix().max_abs_diff(
                ComplexMatrix(2, {1.0, 0.0, 0.0, 0.0})) < 1e-16);
      CHECK(information_state({pi, beta, 0.3}).matrix().max_abs_diff(
                ComplexMatrix(2, {0.0, 0.0, 0.0, 1.0})) < 1e-16);
    }
  }

  TEST_CASE("information state rejects out-of-range parameters") {
    CHECK_THROWS_AS(information_state({-0.1, 0.0, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(information_state({pi + 1e-9, 0.0, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(information_state({0.5, 2 * pi, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(information_state({0.5, -1e-12, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(information_state({0.5, 0.0, 1.01}), InvalidArgument);
    CHECK_THROWS_AS(information_state({0.5, 0.0, std::nan("")}), InvalidArgument);
  }

  TEST_CASE("information state satisfies the coherence bound") {
    for (int a = 0; a <= 20; ++a)
      for (int g = 0; g <= 10; ++g) {
        const auto rho = information_state({pi * a / 20.0, 1.3, g / 10.0});
        CHECK(std::norm(rho(0, 1)) <= rho(0, 0).real() * rho(1, 1).real() + 1e-16);
        CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-15);
      }
  }

  TEST_CASE("werner state limits") {
    const double h = 0.5;
    CHECK(werner_state({1.0}).matrix().max_abs_diff(
              ComplexMatrix(4, {h, 0, 0, h, 0, 0, 0, 0, 0, 0, 0, 0, h, 0, 0, h})) == 0.0);
    CHECK(werner_state({0.0}).matrix().max_abs_diff(Complex(0.25) * ComplexMatrix::identity(4)) ==
          0.0);
  }

  TEST_CASE("werner state at epsilon 0.5") {
    // (1+e)/4 = 0.375, (1-e)/4 = 0.125, e/2 = 0.25
    const auto w = werner_state({0.5});
    CHECK(w.matrix().max_abs_diff(ComplexMatrix(4, {0.375, 0, 0, 0.25,  //
                                                    0, 0.125, 0, 0,      //
                                                    0, 0, 0.125, 0,      //
                                                    0.25, 0, 0, 0.375})) == 0.0);
  }

  TEST_CASE("werner state equals (1-e)/4 I + e |phi+><phi+| built from the ket") {
    Eigen::Vector4cd phi(1.0, 0.0, 0.0, 1.0);
    phi /= std::sqrt(2.0);
    for (int k = 0; k <= 100; ++k) {
      const double e = k / 100.0;
      const ComplexMatrix expected(
          ComplexMatrix::Storage((1.0 - e) / 4.0 * Eigen::Matrix4cd::Identity() +
                                 e * phi * phi.adjoint()));
      CHECK(werner_state({e}).matrix().max_abs_diff(expected) < 1e-15);
    }
  }

  TEST_CASE("werner state is a valid density matrix on a 101-point grid") {
    for (int k = 0; k <= 100; ++k) CHECK_NOTHROW(validate_density(werner_state({k / 100.0}).matrix()));
    CHECK_THROWS_AS(werner_state({1.5}), InvalidArgument);
    CHECK_THROWS_AS(werner_state({-0.5}), InvalidArgument);
  }

  TEST_CASE("ladder expansions reproduce the direct constructions") {
    for (int a = 0; a <= 12; ++a)
      for (int b = 0; b < 12; ++b)
        for (int g = 0; g <= 4; ++g) {
          const InformationState s{pi * a / 12.0, 2 * pi * b / 12.0, g / 4.0};
          CHECK(information_state_from_ladder(s).max_abs_diff(information_state(s).matrix()) <
                1e-14);
        }
    for (int k = 0; k <= 100; ++k) {
      const WernerResource w{k / 100.0};
      CHECK(werner_state_from_ladder(w).max_abs_diff(werner_state(w).matrix()) < 1e-14);
    }
  }

  TEST_CASE("bell projectors") {
    const double h = 0.5;
    CHECK(bell_projector(BellIndex(0)).matrix().max_abs_diff(
              ComplexMatrix(4, {h, 0, 0, h, 0, 0, 0, 0, 0, 0, 0, 0, h, 0, 0, h})) == 0.0);
    CHECK(bell_projector(BellIndex(3)).matrix().max_abs_diff(
              ComplexMatrix(4, {0, 0, 0, 0, 0, h, -h, 0, 0, -h, h, 0, 0, 0, 0, 0})) == 0.0);

    ComplexMatrix sum = ComplexMatrix::zero(4);
    for (auto r : all_bell_indices()) sum = sum + bell_projector(r).matrix();
    CHECK(sum.max_abs_diff(ComplexMatrix::identity(4)) == 0.0);

    for (auto r : all_bell_indices())
      for (auto s : all_bell_indices()) {
        const auto overlap =
            trace_of_product(bell_projector(r).matrix(), bell_projector(s).matrix());
        CHECK(std::abs(overlap - Complex(r == s ? 1.0 : 0.0)) < 1e-15);
      }
  }

  TEST_CASE("bell projectors are rank one") {
    for (auto r : all_bell_indices()) {
      const auto ev = hermitian_eigenvalues(bell_projector(r).matrix());
      CHECK(std::abs(ev[3] - 1.0) < 1e-15);
      for (int k = 0; k < 3; ++k) CHECK(std::abs(ev[k]) < 1e-15);
    }
  }

  TEST_CASE("BellIndex range") {
    CHECK_THROWS_AS(BellIndex(4), InvalidArgument);
    CHECK_THROWS_AS(BellIndex(-1), InvalidArgument);
    CHECK(BellIndex(2).value() == 2);
  }

  TEST_CASE("werner concurrence formula") {
    CHECK(concurrence_werner(1.0) == 1.0);
    CHECK(concurrence_werner(1.0 / 3.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(concurrence_werner(2.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(concurrence_werner(0.2) == 0.0);
    CHECK_THROWS_AS(concurrence_werner(1.1), InvalidArgument);
  }

  TEST_CASE("wootters concurrence") {
    CHECK(wootters_concurrence(werner_state({1.0})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wootters_concurrence(werner_state({0.0})) == doctest::Approx(0.0).epsilon(1e-12));
    for (double e : {0.4, 0.6, 0.9}) {
      CHECK(std::abs(wootters_concurrence(werner_state({e})) - concurrence_werner(e)) < 1e-10);
    }
    for (int k = 0; k <= 100; ++k) {
      const double e = k / 100.0;
      CHECK(std::abs(wootters_concurrence(werner_state({e})) - concurrence_werner(e)) < 1e-10);
    }
    // Product states carry no entanglement.
    const auto product = validate_density(
        kron(information_state({0.7, 1.1, 0.8}).matrix(), information_state({2.0, 0.4, 1.0}).matrix()));
    CHECK(wootters_concurrence(product) < 1e-7);
    CHECK_THROWS_AS(wootters_concurrence(information_state({0.1, 0.0, 1.0})), InvalidArgument);
  }

  TEST_CASE("purity") {
    for (int a = 0; a <= 10; ++a)
      CHECK(purity(information_state({pi * a / 10.0, 0.8, 1.0})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(purity(information_state({pi / 2, 0.0, 0.0})) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(purity(information_state({pi / 2, 0.0, 0.5})) == doctest::Approx(0.625).epsilon(1e-15));
    // 1 - (1 - g^2) sin^2(a) / 2
    for (int a = 0; a <= 10; ++a)
      for (int g = 0; g <= 10; ++g) {
        const double alpha = pi * a / 10.0;
        const double gamma = g / 10.0;
        const double expected = 1.0 - (1.0 - gamma * gamma) * std::sin(alpha) * std::sin(alpha) / 2.0;
        CHECK(std::abs(purity(information_state({alpha, 2.0, gamma})) - expected) < 1e-14);
      }
  }

  TEST_CASE("purity is nondecreasing in gamma at fixed alpha") {
    for (int a = 0; a <= 16; ++a) {
      double previous = 0.0;
      for (int g = 0; g <= 50; ++g) {
        const double p = purity(information_state({pi * a / 16.0, 0.3, g / 50.0}));
        CHECK(p >= previous - 1e-15);
        previous = p;
      }
    }
  }
}
