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

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace werner_teleport::numerics {

// n-point Gauss-Legendre rule on [-1, 1]; nodes ascending.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_legendre(std::size_t n);

struct LineMinimum {
  double x;
  double value;
  double bracket;  // final bracket width
  std::size_t evaluations;
};

// Golden-section search for a minimum of f on [lo, hi], stopping once the
// bracket is narrower than tolerance. The endpoints are evaluated as well,
// so a monotone f returns the better endpoint.
LineMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                    double tolerance);

}  // namespace werner_teleport::numerics
