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

// Acceptance run: one PASS/FAIL line per criterion with the tolerance it is
// held to. Exit status is nonzero only for unexpected failures; --strict
// turns every FAIL into a nonzero exit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pool.hpp"
#include "tripneg/locc_network.hpp"
#include "tripneg/report.hpp"

using namespace tripneg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  // A failure that is understood and documented; it does not fail the run.
  bool known = false;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds, 0 = none
  std::function<Outcome()> check;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

CalibrationRegistry& registry() {
  static CalibrationRegistry reg;
  static const bool ready = (reg.calibrate(SignConfig::parse("+++")), true);
  (void)ready;
  return reg;
}

// Tr M^2 of the matrix whose partial transpose `label` is, by oracle.
double untransposed_purity(const TripartiteState& st, MatrixLabel label) {
  const std::vector<int> dims{st.dims().a, st.dims().b, st.dims().c};
  std::vector<bool> keep{true, true, true};
  switch (label) {
    case MatrixLabel::kAB_TA: keep = {true, true, false}; break;
    case MatrixLabel::kAC_TA: keep = {true, false, true}; break;
    case MatrixLabel::kBC_TB: keep = {false, true, true}; break;
    default: break;
  }
  return oracle::trace_power(oracle::partial_trace(st.matrix(), dims, keep), 2);
}

Outcome table1() {
  const auto cells = table1_comparison();
  int bad = 0;
  bool only_k6 = true;
  std::string which;
  for (const auto& c : cells) {
    if (c.status != CellStatus::kMismatch) continue;
    ++bad;
    which += " " + c.group + "/k" + std::to_string(c.k) + " computed " + num(c.computed * 46656) +
             "/46656 printed " + c.printed.text();
    only_k6 = only_k6 && c.group == "1" && c.k == 6 && std::abs(c.computed - 53.0 / 46656) < kTable1Tol;
  }
  const auto flagged = std::find_if(cells.begin(), cells.end(), [](const Table1Cell& c) { return c.status == CellStatus::kFlagged; });
  const bool k5 = flagged != cells.end() && flagged->alternative &&
                  std::abs(flagged->computed - flagged->alternative->value()) < kTable1Tol;
  Outcome o;
  o.pass = cells.size() == 25 && bad == 0 && k5;
  o.detail = std::to_string(cells.size()) + " cells, k=5 flagged " + (k5 ? "and equal to 19/5184" : "WRONG") +
             ", mismatches " + std::to_string(bad) + which;
  o.known = !o.pass && bad == 1 && only_k6 && k5;
  return o;
}

Outcome headline() {
  const NegativityReport r = negativity_set_via_locc(bound_state(), 8, DetectionMode::kFull, {}, registry());
  double others = 0;
  for (const auto& s : r.splits) {
    if (s.split != Split::kA_BC) others = std::max(others, std::abs(s.value));
  }
  const double err = std::abs(r.at(Split::kA_BC).value - 1.0 / 6);
  std::ostringstream table;
  render_negativity(table, r, OutputFormat::kTable);
  const bool statement =
      table.str().find("ABC^TA negative; ABC^TB non-negative; ABC^TC non-negative; AB^TA non-negative; "
                       "AC^TA non-negative; BC^TB non-negative;") != std::string::npos;
  Outcome o;
  o.pass = err <= 1e-9 && others <= 1e-9 && statement;
  o.detail = "|N_A-BC - 1/6| = " + num(err) + " (tol 1e-9), max other " + num(others) + " (tol 1e-9), statement " +
             (statement ? "present" : "missing");
  return o;
}

Outcome counts() {
  const int expect[4][3] = {{8, 25, 63}, {12, 41, 143}, {16, 57, 255}, {18, 65, 323}};
  Outcome o;
  o.pass = true;
  for (const auto& e : expect) {
    const ParamCountRow r = paramcount(e[0]);
    o.pass = o.pass && r.direct == e[1] && r.tomography == e[2] && r.direct == 4 * (e[0] - 2) + 1 &&
             r.tomography == e[0] * e[0] - 1;
    o.detail += "d=" + std::to_string(e[0]) + ": " + std::to_string(r.direct) + " vs " + std::to_string(r.tomography) + "; ";
  }
  const int measured = static_cast<int>(measure_analytic(bound_state(), DetectionMode::kFull, 8, registry()).size());
  o.pass = o.pass && measured == 25;
  o.detail += "runtime count at d=8 " + std::to_string(measured);
  return o;
}

Outcome oracle_equivalence() {
  double worst_n = 0, worst_m = 0;
  for (int i = 0; i < 100; ++i) {
    const TripartiteState st = random_state(DimTriple(2, 2, 2), 1 + i % 8, 9000 + static_cast<std::uint64_t>(i));
    const NegativityReport locc = negativity_set_via_locc(st, 8, DetectionMode::kFull, {}, registry());
    const NegativityReport direct = negativity_set_direct(st);
    for (Split s : kAllSplits) worst_n = std::max(worst_n, std::abs(locc.at(s).value - direct.at(s).value));
    for (const auto& [label, k, e] : locc.moments->entries()) {
      const ComplexMatrix m = label_matrix(st, label);
      worst_m = std::max(worst_m, std::abs(e.value - oracle::trace_power(m, k)));
    }
  }
  Outcome o;
  o.pass = worst_n <= 1e-6 && worst_m <= 1e-9;
  o.detail = "100 states, max negativity error " + num(worst_n) + " (tol 1e-6), max moment error " + num(worst_m) +
             " (tol 1e-9)";
  return o;
}

Outcome gate_equivalence() {
  std::vector<std::pair<std::string, TripartiteState>> states;
  for (int i = 0; i < 10; ++i) {
    states.emplace_back("random" + std::to_string(i), random_state(DimTriple(2, 2, 2), 1 + i % 8, 7000 + static_cast<std::uint64_t>(i)));
  }
  states.emplace_back("ghz", ghz_state());
  states.emplace_back("w", w_state());
  states.emplace_back("bound", bound_state());
  std::vector<MeasurementGroup> groups{MeasurementGroup::stage_one()};
  for (const char* c : {"-++", "-+-", "++-", "+++"}) groups.push_back(MeasurementGroup::parse(c));

  double worst = 0;
  int settings = 0;
  for (const auto& [name, st] : states) {
    for (int k : {2, 3}) {
      const AncillaState3 first = first_stage(st, k);
      const MomentPrimitives prim = primitives(st, k);
      for (const auto& g : groups) {
        const AncillaDistribution gate = g.is_stage_one() ? first.diagonal() : second_stage(first, g.config());
        const AncillaDistribution exact = analytic_distribution(prim, g, registry());
        for (std::size_t i = 0; i < 8; ++i) worst = std::max(worst, std::abs(gate[i] - exact[i]));
        ++settings;
      }
    }
  }
  Outcome o;
  o.pass = worst <= 1e-10;
  o.detail = std::to_string(settings) + " settings incl. (+++), max |gate - analytic| " + num(worst) + " (tol 1e-10)";
  return o;
}

Outcome second_moments() {
  double worst = 0;
  int n = 0;
  for (const auto& [name, st] : pool::qubit_pool(20)) {
    const MeasurementSet m = measure_analytic(st, DetectionMode::kFull, 8, registry());
    const PTMomentTable t = recover_pt_moments(m, DetectionMode::kFull, registry());
    for (const auto& [label, k, e] : t.entries()) {
      if (k != 2) continue;
      worst = std::max(worst, std::abs(e.value - untransposed_purity(st, label)));
      ++n;
    }
  }
  Outcome o;
  o.pass = n > 0 && worst <= 1e-12;
  o.detail = std::to_string(n) + " second moments, max |Tr (M^T)^2 - Tr M^2| " + num(worst) + " (tol 1e-12)";
  return o;
}

bool relation_holds(const MajorizationReport& r, MatrixLabel lhs, MatrixLabel rhs) {
  for (const auto& rel : r.relations) {
    if (rel.lhs == lhs && rel.rhs == rhs) return rel.holds;
  }
  return true;
}

Outcome majorization() {
  const auto ghz = majorization_report(ghz_state(), MajorizationSource::kLocc, {}, registry());
  const auto bound = majorization_report(bound_state(), MajorizationSource::kLocc, {}, registry());
  const bool ghz_violates = !relation_holds(ghz, MatrixLabel::kABC, MatrixLabel::kA);
  const bool bound_holds = std::all_of(bound.relations.begin(), bound.relations.end(), [](const auto& r) { return r.holds; });
  int detected = 0, outside = 0;
  for (const auto& [name, st] : pool::qubit_pool(60)) {
    if (!majorization_report(st, MajorizationSource::kLocc, {}, registry()).detected()) continue;
    ++detected;
    const auto direct = negativity_set_direct(st).splits;
    const bool ppt_detected =
        std::any_of(direct.begin(), direct.end(), [](const SplitResult& s) { return s.verdict == Verdict::kEntangled; });
    outside += !ppt_detected;
  }
  Outcome o;
  o.pass = ghz_violates && bound_holds && outside == 0;
  o.detail = std::string("GHZ ABC<A ") + (ghz_violates ? "violated" : "holds") + ", bound " +
             (bound_holds ? "satisfies all" : "violates some") + ", pool detected " + std::to_string(detected) +
             " of 65, not PPT-detected " + std::to_string(outside);
  return o;
}

Outcome partial_mode() {
  const NegativityReport a = negativity_set_via_locc(bound_state(), 8, DetectionMode::kASide, {}, registry());
  const NegativityReport full = negativity_set_via_locc(bound_state(), 8, DetectionMode::kFull, {}, registry());
  const double expect[3] = {1.0 / 6, 0.0, 0.0};
  double err = 0, diff = 0;
  std::size_t i = 0;
  for (Split s : {Split::kA_BC, Split::kA_B, Split::kA_C}) {
    err = std::max(err, std::abs(a.at(s).value - expect[i++]));
    diff = std::max(diff, std::abs(a.at(s).value - full.at(s).value));
  }
  Outcome o;
  o.pass = a.splits.size() == 3 && a.parameter_count == 13 && err <= 1e-9 && diff <= 1e-9;
  o.detail = std::to_string(a.parameter_count) + " parameters (2d-3 = 13), error vs {1/6,0,0} " + num(err) +
             ", vs full run " + num(diff) + " (tol 1e-9)";
  return o;
}

Outcome genuine() {
  const TripartiteFlag b = negativity_set_via_locc(bound_state(), 8, DetectionMode::kFull, {}, registry()).tripartite;
  int products = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto r = negativity_set_via_locc(pool::random_product(s), 8, DetectionMode::kFull, {}, registry());
    products += r.tripartite == TripartiteFlag::kNotInferable;
  }
  Outcome o;
  o.pass = b == TripartiteFlag::kDetected && products == 20;
  o.detail = std::string("bound ") + flag_name(b) + ", products not-inferable " + std::to_string(products) + "/20";
  return o;
}

Outcome shots() {
  LoccOptions opt;
  opt.path = PipelinePath::kShots;
  opt.shots = 1'000'000;
  int within = 0;
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    opt.seed = seed;
    const double n = negativity_set_via_locc(bound_state(), 8, DetectionMode::kASide, opt, registry()).at(Split::kA_BC).value;
    const double err = std::abs(n - 1.0 / 6);
    worst = std::max(worst, err);
    within += err <= 0.02;
  }
  Outcome o;
  o.pass = within >= 95;
  o.detail = std::to_string(within) + "/100 seeds within 0.02 of 1/6 (need 95), worst " + num(worst);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i) strict = strict || std::strcmp(argv[i], "--strict") == 0;

  const std::vector<Criterion> criteria = {
      {1, "table1 reproduction (tol 1e-12)", 1.0, table1},
      {2, "bound state through the full LOCC pipeline", 1.0, headline},
      {3, "parameter counts", 0.0, counts},
      {4, "LOCC vs direct on 100 random states", 30.0, oracle_equivalence},
      {5, "gate vs analytic ancilla probabilities", 120.0, gate_equivalence},
      {6, "k=2 moments of partial transposes", 0.0, second_moments},
      {7, "majorization relations", 0.0, majorization},
      {8, "a-side partial mode", 0.0, partial_mode},
      {9, "genuine tripartite inference", 0.0, genuine},
      {10, "shot-noise estimate at 1e6 shots", 0.0, shots},
  };

  int unexpected = 0, failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      o.detail += "; runtime over the " + num(c.time_limit) + " s limit";
      o.pass = false;
      o.known = false;
    }
    if (!o.pass) {
      ++failed;
      unexpected += !o.known;
    }
    std::printf("%s %2d %s: %s [%.2f s]%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
                (!o.pass && o.known) ? " (known: printed value disagrees with the computed one)" : "");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed, %d unexpected failure(s)\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), unexpected);
  return (strict ? failed : unexpected) == 0 ? 0 : 1;
}
