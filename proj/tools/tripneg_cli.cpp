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

// tripneg: command-line front end.
//   detect     negativities (and majorization) of a state file
//   gen        write a preset state
//   table1     recompute the bound-state expectation table
//   paramcount parameter counts against tomography
//   simulate   one (k, group) setting of the network

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tripneg/error.hpp"
#include "tripneg/report.hpp"
#include "tripneg/spectral_recovery.hpp"
#include "tripneg/state_io.hpp"

namespace {

using namespace tripneg;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitConditioning = 3;

struct PathFlags {
  std::string path = "analytic";
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string format = "table";
};

void add_path_flags(CLI::App* cmd, PathFlags& f) {
  cmd->add_option("--path", f.path, "analytic | gate | shots")->check(CLI::IsMember({"analytic", "gate", "shots"}));
  cmd->add_option("--shots", f.shots, "shots per (group, k) on the shots path");
  cmd->add_option("--seed", f.seed, "seed of the shot streams");
  cmd->add_option("--format", f.format, "table | kv")->check(CLI::IsMember({"table", "kv"}));
}

LoccOptions locc_options(const PathFlags& f) {
  LoccOptions o;
  o.path = parse_path(f.path);
  o.shots = f.shots;
  o.seed = f.seed;
  if (o.path == PipelinePath::kShots && o.shots < 1) {
    throw Error(ErrorKind::kInvalidParams, "--path shots needs --shots >= 1");
  }
  return o;
}

int run_detect(const std::string& state_path, const std::string& mode_text, const PathFlags& f) {
  const TripartiteState rho = load_state(state_path);
  const DetectionMode mode = parse_mode(mode_text);
  const LoccOptions options = locc_options(f);
  const OutputFormat format = parse_format(f.format);
  const int d = rho.dims().total();
  if (mode == DetectionMode::kMajorization) {
    CalibrationRegistry::global().calibrate(SignConfig::parse("+++"));
    render_majorization(std::cout, majorization_report(rho, MajorizationSource::kLocc, options), format);
    if (format == OutputFormat::kTable) std::cout << '\n';
    render_negativity(std::cout, negativity_set_via_locc(rho, d, DetectionMode::kFull, options), format, f.path);
    return 0;
  }
  render_negativity(std::cout, negativity_set_via_locc(rho, d, mode, options), format, f.path);
  return 0;
}

struct GenFlags {
  std::string preset;
  std::string out;
  std::vector<int> dims{2, 2, 2};
  std::uint64_t seed = 0;
  int rank = 0;
  std::vector<std::string> dct;
};

// Accepts decimals or exact fractions such as 1/6.
double parse_weight(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } else {
      const double num = std::stod(text.substr(0, slash), &used);
      const std::string den_text = text.substr(slash + 1);
      std::size_t used_den = 0;
      const double den = std::stod(den_text, &used_den);
      if (used == slash && used_den == den_text.size() && den != 0.0) return num / den;
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParse, "cannot read DCT weight '" + text + "'");
}

TripartiteState generate(const GenFlags& g) {
  const DimTriple dims(g.dims.at(0), g.dims.at(1), g.dims.at(2));
  if (g.preset == "ghz") return ghz_state();
  if (g.preset == "w") return w_state();
  if (g.preset == "bound") return bound_state();
  if (g.preset == "mixed") return maximally_mixed_state(dims);
  if (g.preset == "dct") {
    if (g.dct.size() != 5) throw Error(ErrorKind::kInvalidParams, "--dct needs five weights: l0+ l0- l01 l10 l11");
    std::vector<double> w;
    for (const auto& t : g.dct) w.push_back(parse_weight(t));
    return dct_state({w[0], w[1], w[2], w[3], w[4]});
  }
  if (g.preset == "random") return random_state(dims, g.rank > 0 ? g.rank : dims.total(), g.seed);
  if (g.preset == "product") {
    // Pure local states, first column of seeded unitaries.
    const auto local = [&](int d, std::uint64_t s) {
      return pure_projector(random_unitary(d, s).col(0));
    };
    return product_state(local(dims.a, g.seed), local(dims.b, g.seed + 1), local(dims.c, g.seed + 2));
  }
  throw Error(ErrorKind::kInvalidParams, "unknown preset '" + g.preset + "'");
}

int run_gen(const GenFlags& g) {
  const TripartiteState rho = generate(g);
  if (g.out.empty()) {
    write_state(std::cout, rho);
  } else {
    save_state(g.out, rho);
  }
  return 0;
}

int run_simulate(const std::string& state_path, int k, const std::string& group, const PathFlags& f) {
  const TripartiteState rho = load_state(state_path);
  const MeasurementGroup g = MeasurementGroup::parse(group);
  if (!g.is_stage_one()) CalibrationRegistry::global().calibrate(g.config());
  const PipelinePath path = parse_path(f.path);
  render_simulation(std::cout, simulate_setting(rho, k, g, path, f.shots, f.seed), parse_format(f.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tripartite negativities from LOCC trace-power measurements"};
  app.require_subcommand(1);

  std::string state_path;
  std::string mode = "full";
  PathFlags detect_flags;
  auto* detect = app.add_subcommand("detect", "Reconstruct negativities of a state file");
  detect->add_option("--state", state_path, "state file")->required();
  detect->add_option("--mode", mode, "full | a-side | b-side | c-side | majorization")
      ->check(CLI::IsMember({"full", "a-side", "b-side", "c-side", "majorization"}));
  add_path_flags(detect, detect_flags);

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "Write a preset state file");
  gen->add_option("preset", gen_flags.preset, "ghz | w | bound | dct | random | product | mixed")
      ->required()
      ->check(CLI::IsMember({"ghz", "w", "bound", "dct", "random", "product", "mixed"}));
  gen->add_option("--out", gen_flags.out, "output path (stdout when omitted)");
  gen->add_option("--dims", gen_flags.dims, "dA dB dC")->expected(3);
  gen->add_option("--seed", gen_flags.seed, "seed for random and product presets");
  gen->add_option("--rank", gen_flags.rank, "rank of the random preset (default full)");
  gen->add_option("--dct", gen_flags.dct, "DCT weights l0+ l0- l01 l10 l11 (decimals or p/q)")->expected(5);

  std::string table_format = "table";
  auto* table1 = app.add_subcommand("table1", "Recompute the bound-state expectation table");
  table1->add_option("--format", table_format, "table | kv")->check(CLI::IsMember({"table", "kv"}));

  std::vector<int> dlist{8, 12, 16, 18};
  std::string count_format = "table";
  auto* count = app.add_subcommand("paramcount", "Measured parameters against tomography");
  count->add_option("d", dlist, "total dimensions (>= 3)");
  count->add_option("--format", count_format, "table | kv")->check(CLI::IsMember({"table", "kv"}));

  std::string sim_state;
  int sim_k = 2;
  std::string sim_group = "1";
  PathFlags sim_flags;
  auto* simulate = app.add_subcommand("simulate", "Outcome probabilities of one setting");
  simulate->add_option("--state", sim_state, "state file")->required();
  simulate->add_option("--k", sim_k, "number of copies");
  simulate->add_option("--group", sim_group, "1 or a sign configuration such as -++");
  add_path_flags(simulate, sim_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*detect) return run_detect(state_path, mode, detect_flags);
    if (*gen) return run_gen(gen_flags);
    if (*table1) {
      const auto cells = table1_comparison();
      render_table1(std::cout, cells, parse_format(table_format));
      return table1_ok(cells) ? 0 : kExitValidation;
    }
    if (*count) {
      std::vector<ParamCountRow> rows;
      for (int d : dlist) rows.push_back(paramcount(d));
      render_paramcount(std::cout, rows, parse_format(count_format));
      return 0;
    }
    if (*simulate) return run_simulate(sim_state, sim_k, sim_group, sim_flags);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::kIllConditioned ? kExitConditioning : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}
