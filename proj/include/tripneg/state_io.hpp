// Copyright 2026 The tripneg Authors
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

// Plain-text state files:
//   # comment lines anywhere
//   dA dB dC
//   d*d lines "re im", row-major

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tripneg/state_factory.hpp"

namespace tripneg {

/// Shortest text that reads back to the same double (17 significant digits).
std::string format_double(double v);

/// Throws kParse with the offending line number, or the state's own
/// validation error when the matrix is not a density matrix.
TripartiteState read_state(std::istream& in);
TripartiteState load_state(const std::filesystem::path& path);

void write_state(std::ostream& out, const TripartiteState& rho);
void save_state(const std::filesystem::path& path, const TripartiteState& rho);

}  // namespace tripneg
