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

#include "werner_teleport/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "werner_teleport/numerics.hpp"
#include "werner_teleport/ranges.hpp"

namespace werner_teleport {
namespace {

using std::numbers::pi;

// A candidate must beat the incumbent by this much; keeps lexicographic
// tie-breaks stable against rounding noise on flat landscapes.
constexpr double kImprovementMargin = 1e-15;
constexpr int kMaxSweeps = 200;

double closed_form_unchecked(double alpha, double beta, double gamma, double epsilon, double theta,
                             double phi, double psi) {
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  const double half_c = std::cos(theta / 2.0);
  const double half_s = std::sin(theta / 2.0);
  const double g2e = gamma * gamma * epsilon;
  return 0.5 * ((1.0 + epsilon * std::cos(theta) * ca * ca) +
                gamma * epsilon * std::sin(theta) * std::sin(2.0 * alpha) * std::sin(phi) *
                    std::sin(beta + psi) +
                g2e * half_c * half_c * std::cos(2.0 * phi) * sa * sa -
                g2e * half_s * half_s * sa * sa * std::cos(2.0 * (beta + psi)));
}

// The closed form regrouped for fixed (gamma, epsilon, theta, phi, psi):
//   F = 1/2 [1 + A cos^2 a + sin 2a (B1 sin b + B2 cos b)
//            + sin^2 a (C - D1 cos 2b + D2 sin 2b)]
struct Coefficients {
  double a, b1, b2, c, d1, d2;

  Coefficients(double gamma, double epsilon, double theta, double phi, double psi) {
    const double half_c = std::cos(theta / 2.0);
    const double half_s = std::sin(theta / 2.0);
    const double b = gamma * epsilon * std::sin(theta) * std::sin(phi);
    const double d = gamma * gamma * epsilon * half_s * half_s;
    a = epsilon * std::cos(theta);
    b1 = b * std::cos(psi);
    b2 = b * std::sin(psi);
    c = gamma * gamma * epsilon * half_c * half_c * std::cos(2.0 * phi);
    d1 = d * std::cos(2.0 * psi);
    d2 = d * std::sin(2.0 * psi);
  }

  double operator()(double alpha, double beta) const {
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    return 0.5 * (1.0 + a * ca * ca +
                  std::sin(2.0 * alpha) * (b1 * std::sin(beta) + b2 * std::cos(beta)) +
                  sa * sa * (c - d1 * std::cos(2.0 * beta) + d2 * std::sin(2.0 * beta)));
  }
};

// Trig tables for the (alpha, beta) scan.
struct InformationGrid {
  std::vector<double> alpha, beta;
  std::vector<double> cos2_a, sin_2a, sin2_a;
  std::vector<double> sin_b, cos_b, sin_2b, cos_2b;

  explicit InformationGrid(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const double a = pi * static_cast<double>(i) / static_cast<double>(n - 1);
      alpha.push_back(a);
      cos2_a.push_back(std::cos(a) * std::cos(a));
      sin_2a.push_back(std::sin(2.0 * a));
      sin2_a.push_back(std::sin(a) * std::sin(a));
      const double b = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n);
      beta.push_back(b);
      sin_b.push_back(std::sin(b));
      cos_b.push_back(std::cos(b));
      sin_2b.push_back(std::sin(2.0 * b));
      cos_2b.push_back(std::cos(2.0 * b));
    }
  }

  std::size_t size() const { return alpha.size(); }
};

double wrap_two_pi(double x) {
  double y = std::fmod(x, 2.0 * pi);
  if (y < 0.0) y += 2.0 * pi;
  return y >= 2.0 * pi ? 0.0 : y;
}

struct InnerResult {
  double value;
  double alpha;
  double beta;
  double bracket;
};

InnerResult minimize_information(const InformationGrid& grid, const Coefficients& f,
                                 double tolerance) {
  const std::size_t n = grid.size();
  double best = std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  std::size_t bj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v =
          0.5 * (1.0 + f.a * grid.cos2_a[i] +
                 grid.sin_2a[i] * (f.b1 * grid.sin_b[j] + f.b2 * grid.cos_b[j]) +
                 grid.sin2_a[i] * (f.c - f.d1 * grid.cos_2b[j] + f.d2 * grid.sin_2b[j]));
      if (v < best - kImprovementMargin) {
        best = v;
        bi = i;
        bj = j;
      }
    }
  }

  // On a pole row beta is inert; take it from the neighbouring ring instead.
  if (bi == 0 || bi == n - 1) {
    const std::size_t ring = bi == 0 ? 1 : n - 2;
    double ring_best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double v = f(grid.alpha[ring], grid.beta[j]);
      if (v < ring_best - kImprovementMargin) {
        ring_best = v;
        bj = j;
      }
    }
  }

  double alpha = grid.alpha[bi];
  double beta = grid.beta[bj];
  double value = f(alpha, beta);
  double bracket = 0.0;
  const double h_alpha = pi / static_cast<double>(n - 1);
  const double h_beta = 2.0 * pi / static_cast<double>(n);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool improved = false;
    const auto along_alpha = numerics::golden_section_minimize(
        [&](double a) { return f(a, beta); }, std::max(0.0, alpha - h_alpha),
        std::min(pi, alpha + h_alpha), tolerance);
    if (along_alpha.value < value - kImprovementMargin) {
      alpha = along_alpha.x;
      value = along_alpha.value;
      improved = true;
    }
    const auto along_beta = numerics::golden_section_minimize(
        [&](double b) { return f(alpha, b); }, beta - h_beta, beta + h_beta, tolerance);
    if (along_beta.value < value - kImprovementMargin) {
      beta = along_beta.x;
      value = along_beta.value;
      improved = true;
    }
    bracket = std::max(along_alpha.bracket, along_beta.bracket);
    if (!improved) break;
  }
  return {value, alpha, wrap_two_pi(beta), bracket};
}

void require_grid(std::size_t grid, std::size_t minimum, const char* name) {
  if (grid < minimum) {
    throw InvalidArgument(std::string(name) + " must be at least " + std::to_string(minimum));
  }
}

}  // namespace

void FidelityParameters::validate() const {
  require_closed("alpha", alpha, 0.0, pi);
  require_half_open("beta", beta, 0.0, 2.0 * pi);
  require_closed("gamma", gamma, 0.0, 1.0);
  require_closed("epsilon", epsilon, 0.0, 1.0);
  require_closed("theta", theta, 0.0, pi);
  require_closed("phi", phi, 0.0, pi);
  require_closed("psi", psi, 0.0, pi);
}

double fidelity_closed_form(const FidelityParameters& p) {
  p.validate();
  return closed_form_unchecked(p.alpha, p.beta, p.gamma, p.epsilon, p.theta, p.phi, p.psi);
}

double masfi(double gamma, double epsilon) {
  require_closed("gamma", gamma, 0.0, 1.0);
  require_closed("epsilon", epsilon, 0.0, 1.0);
  return 0.5 * (1.0 + gamma * gamma * epsilon);
}

double f_max(double epsilon) {
  require_closed("epsilon", epsilon, 0.0, 1.0);
  return 0.5 * (1.0 + epsilon);
}

double f_av_max(double gamma, double epsilon) {
  require_closed("gamma", gamma, 0.0, 1.0);
  require_closed("epsilon", epsilon, 0.0, 1.0);
  return 0.5 + epsilon * (1.0 + 2.0 * gamma * gamma) / 6.0;
}

double fidelity_gap(double gamma, double epsilon) {
  require_closed("gamma", gamma, 0.0, 1.0);
  require_closed("epsilon", epsilon, 0.0, 1.0);
  return (1.0 - gamma * gamma) * epsilon / 6.0;
}

ClassicalThresholds classical_threshold(double gamma) {
  require_closed("gamma", gamma, 0.0, 1.0);
  const double g2 = gamma * gamma;
  const double masfi_eps = g2 > 0.0 ? 1.0 / (3.0 * g2) : std::numeric_limits<double>::infinity();
  return {1.0 / (1.0 + 2.0 * g2), masfi_eps, masfi_eps <= 1.0};
}

double average_fidelity_numeric(double gamma, double epsilon, const UnitaryAngles& angles,
                                std::size_t nodes) {
  require_closed("gamma", gamma, 0.0, 1.0);
  require_closed("epsilon", epsilon, 0.0, 1.0);
  angles.validate();
  require_grid(nodes, 8, "average_fidelity_numeric: nodes");
  const auto rule = numerics::gauss_legendre(nodes);
  const std::size_t m = 2 * nodes;
  const double dbeta = 2.0 * pi / static_cast<double>(m);
  double total = 0.0;
  for (std::size_t k = 0; k < nodes; ++k) {
    const double alpha = std::acos(rule.nodes[k]);
    double ring = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      ring += closed_form_unchecked(alpha, dbeta * static_cast<double>(j), gamma, epsilon,
                                    angles.theta, angles.phi, angles.psi);
    }
    total += rule.weights[k] * ring * dbeta;
  }
  return total / (4.0 * pi);
}

InformationMinimum min_over_information(double gamma, double epsilon, const UnitaryAngles& angles,
                                        std::size_t grid) {
  require_closed("gamma", gamma, 0.0, 1.0);
  require_closed("epsilon", epsilon, 0.0, 1.0);
  angles.validate();
  require_grid(grid, 32, "min_over_information: grid");
  const InformationGrid tables(grid);
  const Coefficients f(gamma, epsilon, angles.theta, angles.phi, angles.psi);
  const auto r = minimize_information(tables, f, 1e-9);
  return {closed_form_unchecked(r.alpha, r.beta, gamma, epsilon, angles.theta, angles.phi,
                                angles.psi),
          r.alpha, r.beta};
}

MinimaxResult minimax_search(double gamma, double epsilon, const MinimaxOptions& options) {
  require_closed("gamma", gamma, 0.0, 1.0);
  require_closed("epsilon", epsilon, 0.0, 1.0);
  require_grid(options.outer_grid, 2, "minimax_search: outer_grid");
  require_grid(options.inner_grid, 32, "minimax_search: inner_grid");

  const std::size_t n = options.outer_grid;
  const InformationGrid tables(options.inner_grid);
  const double tol = options.bracket_tolerance;
  auto axis = [&](std::size_t i) { return pi * static_cast<double>(i) / static_cast<double>(n - 1); };
  auto inner = [&](double theta, double phi, double psi) {
    return minimize_information(tables, Coefficients(gamma, epsilon, theta, phi, psi), tol);
  };

  // Outer scan; each worker owns whole theta slices, reduction is sequential.
  std::vector<double> scan(n * n * n);
  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1U, static_cast<unsigned>(n));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              scan[(i * n + j) * n + k] = inner(axis(i), axis(j), axis(k)).value;
      });
    }
  }
  std::size_t best_index = 0;
  for (std::size_t idx = 1; idx < scan.size(); ++idx)
    if (scan[idx] > scan[best_index] + kImprovementMargin) best_index = idx;

  double point[3] = {axis(best_index / (n * n)), axis((best_index / n) % n), axis(best_index % n)};
  double value = scan[best_index];
  std::size_t iterations = scan.size();
  double bracket = 0.0;
  const double h = pi / static_cast<double>(n - 1);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool improved = false;
    for (int c = 0; c < 3; ++c) {
      auto line = [&](double x) {
        double trial[3] = {point[0], point[1], point[2]};
        trial[c] = x;
        return -inner(trial[0], trial[1], trial[2]).value;
      };
      const auto r = numerics::golden_section_minimize(line, std::max(0.0, point[c] - h),
                                                       std::min(pi, point[c] + h), tol);
      iterations += r.evaluations;
      bracket = std::max(bracket, r.bracket);
      if (-r.value > value + kImprovementMargin) {
        point[c] = r.x;
        value = -r.value;
        improved = true;
      }
    }
    if (!improved) break;
  }

  const auto at = inner(point[0], point[1], point[2]);
  ++iterations;
  return {closed_form_unchecked(at.alpha, at.beta, gamma, epsilon, point[0], point[1], point[2]),
          at.alpha,
          at.beta,
          point[0],
          point[1],
          point[2],
          iterations,
          std::max(bracket, at.bracket)};
}

MaximumResult max_fidelity_search(double gamma, double epsilon, double beta, double psi,
                                  std::size_t grid) {
  require_closed("gamma", gamma, 0.0, 1.0);
  require_closed("epsilon", epsilon, 0.0, 1.0);
  require_half_open("beta", beta, 0.0, 2.0 * pi);
  require_closed("psi", psi, 0.0, pi);
  require_grid(grid, 2, "max_fidelity_search: grid");

  auto f = [&](const double (&x)[3]) {
    return closed_form_unchecked(x[2], beta, gamma, epsilon, x[0], x[1], psi);
  };
  auto axis = [&](std::size_t i) {
    return pi * static_cast<double>(i) / static_cast<double>(grid - 1);
  };
  double point[3] = {0.0, 0.0, 0.0};
  double value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = 0; j < grid; ++j)
      for (std::size_t k = 0; k < grid; ++k) {
        const double x[3] = {axis(i), axis(j), axis(k)};
        const double v = f(x);
        if (v > value + kImprovementMargin) {
          value = v;
          point[0] = x[0];
          point[1] = x[1];
          point[2] = x[2];
        }
      }

  const double h = pi / static_cast<double>(grid - 1);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool improved = false;
    for (int c = 0; c < 3; ++c) {
      auto line = [&](double t) {
        double trial[3] = {point[0], point[1], point[2]};
        trial[c] = t;
        return -f(trial);
      };
      const auto r = numerics::golden_section_minimize(line, std::max(0.0, point[c] - h),
                                                       std::min(pi, point[c] + h), 1e-9);
      if (-r.value > value + kImprovementMargin) {
        point[c] = r.x;
        value = -r.value;
        improved = true;
      }
    }
    if (!improved) break;
  }
  return {value, point[0], point[1], point[2]};
}

}  // namespace werner_teleport
