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

#include <sstream>
#include <string_view>

#include "werner_teleport/error.hpp"

namespace werner_teleport {

// NaN fails both checks.
inline void require_closed(std::string_view name, double value, double lo, double hi) {
  if (!(value >= lo && value <= hi)) {
    std::ostringstream msg;
    msg << name << " = " << value << " outside [" << lo << ", " << hi << "]";
    throw InvalidArgument(msg.str());
  }
}

inline void require_half_open(std::string_view name, double value, double lo, double hi) {
  if (!(value >= lo && value < hi)) {
    std::ostringstream msg;
    msg << name << " = " << value << " outside [" << lo << ", " << hi << ")";
    throw InvalidArgument(msg.str());
  }
}

}  // namespace werner_teleport
