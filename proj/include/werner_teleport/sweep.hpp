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

// (gamma, epsilon) surface sweeps of the analytic fidelity quantities.
//
// Rows are emitted gamma-major (gamma outer, epsilon inner). CSV carries the
// header `gamma,epsilon,value`; JSON lines carry the keys gamma, epsilon,
// value. Numbers use 12 significant digits, lines end in '\n'.

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace werner_teleport {

enum class Quantity { Masfi, FavMax, Gap, FMax };
enum class OutputFormat { Csv, Jsonl };

// Accepts masfi, favmax, gap, fmax. Throws InvalidArgument otherwise.
Quantity parse_quantity(std::string_view name);
std::string_view quantity_name(Quantity q);

// Accepts csv, jsonl.
OutputFormat parse_format(std::string_view name);

struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 51;

  // Bounds within [0, 1], min <= max, count >= 2.
  void validate(std::string_view name) const;
  // count points from min to max inclusive; the last point is exactly max.
  std::vector<double> points() const;
};

// Parses "min:max:count".
GridSpec parse_grid(std::string_view text);

struct SweepConfig {
  GridSpec gamma_grid;
  GridSpec epsilon_grid;
  Quantity quantity = Quantity::Masfi;
  std::string output_path;  // empty means standard output
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Csv;
};

struct SweepRow {
  double gamma;
  double epsilon;
  double value;
};

double evaluate_quantity(Quantity q, double gamma, double epsilon);

std::vector<SweepRow> sweep(const SweepConfig& config);

// printf("%.12g")
std::string format_number(double x);

void write_rows(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format);

}  // namespace werner_teleport
