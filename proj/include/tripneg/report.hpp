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

// Rendering of reports, the Table-1 comparison for the bound state, the
// parameter-count table and single-setting simulation dumps.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tripneg/spectral_recovery.hpp"

namespace tripneg {

enum class OutputFormat { kTable, kKv };

OutputFormat parse_format(std::string_view name);

void render_negativity(std::ostream& out, const NegativityReport& report, OutputFormat format,
                       std::string_view path = "");
void render_majorization(std::ostream& out, const MajorizationReport& report,
                         OutputFormat format);

/// A printed value p/q, optionally divided by sqrt 2.
struct Rational {
  long long num = 0;
  long long den = 1;
  bool over_sqrt2 = false;

  double value() const;
  std::string text() const;
};

enum class CellStatus { kMatch, kMismatch, kFlagged };

struct Table1Cell {
  std::string group;
  int k = 0;
  double computed = 0.0;
  Rational printed;
  /// Reading the cell is checked against when the printed value is suspect.
  std::optional<Rational> alternative;
  CellStatus status = CellStatus::kMatch;
  /// |computed - printed|.
  double deviation = 0.0;
};

inline constexpr double kTable1Tol = 1e-12;

/// All 25 printed cells, recomputed from the closed forms for the bound state.
std::vector<Table1Cell> table1_comparison();
/// True iff no unflagged cell deviates beyond kTable1Tol.
bool table1_ok(const std::vector<Table1Cell>& cells);
void render_table1(std::ostream& out, const std::vector<Table1Cell>& cells, OutputFormat format);

struct ParamCountRow {
  int d = 0;
  int direct = 0;
  int tomography = 0;
};

/// direct = 4(d-2)+1, tomography = d^2-1. Throws kInvalidParams for d < 3.
ParamCountRow paramcount(int d);
void render_paramcount(std::ostream& out, const std::vector<ParamCountRow>& rows,
                       OutputFormat format);

struct SimulationResult {
  int k = 0;
  std::string group;
  PipelinePath path = PipelinePath::kAnalytic;
  AncillaDistribution distribution = AncillaDistribution::uniform();
  GroupReadout readout;
  /// Largest |gate - analytic| probability, on the gate path only.
  std::optional<double> deviation;
};

/// One (k, group) setting along `path`. The shots path uses `shots` and `seed`.
SimulationResult simulate_setting(const TripartiteState& rho, int k, const MeasurementGroup& group,
                                  PipelinePath path, std::uint64_t shots = 0,
                                  std::uint64_t seed = 0, const NetworkOptions& network = {},
                                  const CalibrationRegistry& registry =
                                      CalibrationRegistry::global());
void render_simulation(std::ostream& out, const SimulationResult& result, OutputFormat format);

}  // namespace tripneg
