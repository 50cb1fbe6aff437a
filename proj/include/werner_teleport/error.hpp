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

#include <stdexcept>
#include <string>

namespace werner_teleport {

// Raised for any argument outside its documented domain (ranges,
// dimensions, qubit sets, non-unitary operators).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by validate_density; kind() names the violated invariant.
class DensityError : public std::invalid_argument {
 public:
  enum class Kind { NonHermitian, TraceNotOne, NotPositive };

  DensityError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// A Bell-measurement branch whose probability is too small to normalize.
class DegenerateOutcome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace werner_teleport
