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

#include "werner_teleport/sweep.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <system_error>

#include "werner_teleport/error.hpp"
#include "werner_teleport/fidelity.hpp"

namespace werner_teleport {
namespace {

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw InvalidArgument("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Quantity parse_quantity(std::string_view name) {
  if (name == "masfi") return Quantity::Masfi;
  if (name == "favmax") return Quantity::FavMax;
  if (name == "gap") return Quantity::Gap;
  if (name == "fmax") return Quantity::FMax;
  throw InvalidArgument("unknown quantity '" + std::string(name) +
                        "' (expected masfi, favmax, gap or fmax)");
}

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Masfi:
      return "masfi";
    case Quantity::FavMax:
      return "favmax";
    case Quantity::Gap:
      return "gap";
    case Quantity::FMax:
      return "fmax";
  }
  return "";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "jsonl") return OutputFormat::Jsonl;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (expected csv or jsonl)");
}

void GridSpec::validate(std::string_view name) const {
  std::ostringstream msg;
  if (!(min >= 0.0 && max <= 1.0 && min <= max)) {
    msg << name << ": bounds [" << min << ", " << max << "] must satisfy 0 <= min <= max <= 1";
    throw InvalidArgument(msg.str());
  }
  if (count < 2) {
    msg << name << ": count must be at least 2 (got " << count << ")";
    throw InvalidArgument(msg.str());
  }
}

std::vector<double> GridSpec::points() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  out.back() = max;
  return out;
}

GridSpec parse_grid(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw InvalidArgument("grid '" + std::string(text) + "' is not of the form min:max:count");
  }
  GridSpec g;
  g.min = parse_double(text.substr(0, first), "grid min");
  g.max = parse_double(text.substr(first + 1, second - first - 1), "grid max");
  const auto count_text = text.substr(second + 1);
  const auto [ptr, ec] =
      std::from_chars(count_text.data(), count_text.data() + count_text.size(), g.count);
  if (ec != std::errc{} || ptr != count_text.data() + count_text.size()) {
    throw InvalidArgument("cannot parse grid count '" + std::string(count_text) + "'");
  }
  return g;
}

double evaluate_quantity(Quantity q, double gamma, double epsilon) {
  switch (q) {
    case Quantity::Masfi:
      return masfi(gamma, epsilon);
    case Quantity::FavMax:
      return f_av_max(gamma, epsilon);
    case Quantity::Gap:
      return fidelity_gap(gamma, epsilon);
    case Quantity::FMax:
      return f_max(epsilon);
  }
  throw InvalidArgument("unknown quantity");
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
  config.gamma_grid.validate("gamma grid");
  config.epsilon_grid.validate("epsilon grid");
  const auto gammas = config.gamma_grid.points();
  const auto epsilons = config.epsilon_grid.points();
  std::vector<SweepRow> rows;
  rows.reserve(gammas.size() * epsilons.size());
  for (double g : gammas)
    for (double e : epsilons) rows.push_back({g, e, evaluate_quantity(config.quantity, g, e)});
  return rows;
}

std::string format_number(double x) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write_rows(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "gamma,epsilon,value\n";
    for (const auto& r : rows)
      out << format_number(r.gamma) << ',' << format_number(r.epsilon) << ','
          << format_number(r.value) << '\n';
    return;
  }
  for (const auto& r : rows)
    out << "{\"gamma\":" << format_number(r.gamma) << ",\"epsilon\":" << format_number(r.epsilon)
        << ",\"value\":" << format_number(r.value) << "}\n";
}

}  // namespace werner_teleport
