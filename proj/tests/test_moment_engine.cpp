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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "pool.hpp"
#include "tripneg/error.hpp"
#include "tripneg/moment_engine.hpp"

using namespace tripneg;

namespace {

const double kS2 = std::numbers::sqrt2;

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Oracle construction of each labelled matrix.
ComplexMatrix oracle_label(const ComplexMatrix& rho, MatrixLabel l) {
  using oracle::partial_trace;
  using oracle::partial_transpose;
  const std::vector<int> q3{2, 2, 2}, q2{2, 2};
  switch (l) {
    case MatrixLabel::kABC: return rho;
    case MatrixLabel::kABC_TA: return partial_transpose(rho, q3, 0);
    case MatrixLabel::kABC_TB: return partial_transpose(rho, q3, 1);
    case MatrixLabel::kABC_TC: return partial_transpose(rho, q3, 2);
    case MatrixLabel::kAB: return partial_trace(rho, q3, {true, true, false});
    case MatrixLabel::kAB_TA: return partial_transpose(partial_trace(rho, q3, {true, true, false}), q2, 0);
    case MatrixLabel::kAC: return partial_trace(rho, q3, {true, false, true});
    case MatrixLabel::kAC_TA: return partial_transpose(partial_trace(rho, q3, {true, false, true}), q2, 0);
    case MatrixLabel::kBC: return partial_trace(rho, q3, {false, true, true});
    case MatrixLabel::kBC_TB: return partial_transpose(partial_trace(rho, q3, {false, true, true}), q2, 0);
    case MatrixLabel::kA: return partial_trace(rho, q3, {true, false, false});
    case MatrixLabel::kB: return partial_trace(rho, q3, {false, true, false});
    case MatrixLabel::kC: return partial_trace(rho, q3, {false, false, true});
  }
  return rho;
}

std::array<int, 3> signs_of(SignConfig c) {
  const auto s = [](Sign x) { return x == Sign::kPlus ? 1 : -1; };
  return {s(c.a), s(c.b), s(c.c)};
}

}  // namespace

TEST_CASE("labels") {
  for (MatrixLabel l : kAllMatrixLabels) CHECK(parse_label(label_name(l)) == l);
  CHECK_FALSE(parse_label("XYZ").has_value());
  const DimTriple d(2, 3, 4);
  CHECK(label_dimension(MatrixLabel::kABC_TB, d) == 24);
  CHECK(label_dimension(MatrixLabel::kAC_TA, d) == 8);
  CHECK(label_dimension(MatrixLabel::kBC, d) == 12);
  CHECK(label_dimension(MatrixLabel::kB, d) == 3);
}

TEST_CASE("labelled matrices against oracles") {
  for (const auto& [name, st] : pool::qubit_pool(4)) {
    for (MatrixLabel l : kAllMatrixLabels) {
      CHECK_MESSAGE(max_abs(label_matrix(st, l) - oracle_label(st.matrix(), l)) < 1e-15, name << " " << label_name(l));
    }
  }
}

TEST_CASE("primitives") {
  const MomentPrimitives b3 = primitives(bound_state(), 3);
  CHECK(std::abs(b3.gamma[0] - 1.0 / 72) < 1e-15);
  CHECK(std::abs(b3.gamma[1] - 1.0 / 144) < 1e-15);
  CHECK(std::abs(b3.gamma[2] - 1.0 / 72) < 1e-15);
  CHECK(std::abs(b3.gamma[3] - 1.0 / 72) < 1e-15);

  const TripartiteState mixed = maximally_mixed_state(DimTriple(2, 2, 2));
  for (int k = 1; k <= 5; ++k) {
    const MomentPrimitives p = primitives(mixed, k);
    for (double g : p.gamma) CHECK(std::abs(g - std::pow(8.0, 1 - k) / 4) < 1e-15);
  }

  for (const auto& [name, st] : pool::qubit_pool(4)) {
    const MomentPrimitives p1 = primitives(st, 1);
    CHECK(std::abs(p1.alpha[0] - 3.0) < 1e-14);
    for (double b : p1.beta) CHECK(std::abs(b - 0.5) < 1e-14);
    for (double g : p1.gamma) CHECK(std::abs(g - 0.25) < 1e-14);

    const MomentPrimitives p2 = primitives(st, 2);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(p2.beta[static_cast<std::size_t>(i)] - p2.beta[static_cast<std::size_t>(i + 3)]) < 1e-14);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(p2.gamma[0] - p2.gamma[static_cast<std::size_t>(i)]) < 1e-14);

    const MomentPrimitives p4 = primitives(st, 4);
    CHECK(std::abs(p4.alpha[0] + p4.alpha[3] - p4.alpha[1] - p4.alpha[2]) < 1e-14);
    CHECK(p4.gamma[0] > 0);
    for (double b : p4.beta) CHECK(std::abs(b) <= 0.5 + 1e-14);
    for (double g : p4.gamma) CHECK(std::abs(g) <= 0.25 + 1e-14);
  }
}

TEST_CASE("mu vector") {
  const MuVector mm = mu_vector(primitives(maximally_mixed_state(DimTriple(2, 2, 2)), 2));
  CHECK(std::abs(mm.mu[0] - 27.0 / 8) < 1e-14);
  for (int i = 8; i < 14; ++i) CHECK(std::abs(mm.mu[static_cast<std::size_t>(i)]) < 1e-15);

  // 2 alpha_1 + 2 sum(gamma) = 3 + 4/9.
  const MuVector mb = mu_vector(primitives(bound_state(), 2));
  CHECK(std::abs(mb.mu[0] - mb.mu[7] - 31.0 / 9) < 1e-14);

  const MuVector flat = mu_vector(MomentPrimitives{});
  for (int i = 0; i < 8; ++i) CHECK(flat.mu[static_cast<std::size_t>(i)] == 1.0);
  for (int i = 8; i < 14; ++i) CHECK(flat.mu[static_cast<std::size_t>(i)] == 0.0);

  for (const auto& [name, st] : pool::qubit_pool(6)) {
    for (int k = 2; k <= 8; ++k) {
      const MuVector m = mu_vector(primitives(st, k));
      double total = 0;
      for (int i = 0; i < 8; ++i) {
        CHECK(m.mu[static_cast<std::size_t>(i)] >= -1e-12);
        total += m.mu[static_cast<std::size_t>(i)];
      }
      CHECK(std::abs(total - 8.0) < 1e-12);
    }
  }
}

TEST_CASE("stage-one matrix equals the interferometer expansion") {
  for (const auto& [name, st] : pool::qubit_pool(4)) {
    for (int k : {2, 3, 4}) {
      const ComplexMatrix m = stage_one_matrix(mu_vector(primitives(st, k)));
      const ComplexMatrix o = oracle::stage_one(st.matrix(), {2, 2, 2}, k);
      CHECK_MESSAGE(max_abs(m - o) < 1e-12, name << " k=" << k);
      // Zero pattern: entries that vanish structurally stay exactly zero.
      for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
          if (__builtin_popcount(i ^ j) % 2 == 1) CHECK(m(i, j) == Complex(0));
        }
      }
    }
  }
}

TEST_CASE("calibration") {
  for (const char* l : {"-++", "-+-", "++-"}) {
    const SignConfig c = SignConfig::parse(l);
    CHECK(calibrate_config(c) == *published_pattern(c));
  }
  const ConfigPattern ppp = calibrate_config(SignConfig::parse("+++"));
  CHECK(ppp.gamma_signs == std::array<int, 4>{-1, 1, 1, 1});
  CHECK(ppp.pair_beta == std::array<int, 3>{3, 4, 5});

  CHECK(published_pattern(SignConfig::parse("-++"))->gamma_signs == std::array<int, 4>{1, -1, 1, 1});
  CHECK(published_pattern(SignConfig::parse("-++"))->pair_beta == std::array<int, 3>{0, 1, 5});
  CHECK(published_pattern(SignConfig::parse("-+-"))->pair_beta == std::array<int, 3>{0, 4, 2});
  CHECK(published_pattern(SignConfig::parse("++-"))->pair_beta == std::array<int, 3>{3, 1, 2});

  CalibrationRegistry fresh;
  CHECK_THROWS_AS(fresh.require(SignConfig::parse("+++")), Error);
  try {
    nu_vector(primitives(bound_state(), 3), SignConfig::parse("+++"), fresh);
    FAIL("expected not-calibrated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotCalibrated);
  }
  CHECK(fresh.calibrate(SignConfig::parse("+++")) == ppp);
  CHECK(fresh.require(SignConfig::parse("+++")) == ppp);
}

TEST_CASE("nu vector") {
  CalibrationRegistry reg;
  for (const SignConfig& c : SignConfig::all()) reg.calibrate(c);

  const auto zzz = [&](const TripartiteState& st, int k, const char* l) {
    return readout_from(analytic_distribution(primitives(st, k), MeasurementGroup::parse(l), reg)).zzz;
  };
  CHECK(std::abs(zzz(bound_state(), 3, "-++") - 5.0 / (144 * kS2)) < 1e-14);
  CHECK(std::abs(zzz(bound_state(), 3, "++-") - 1.0 / (48 * kS2)) < 1e-14);
  CHECK(std::abs(zzz(maximally_mixed_state(DimTriple(2, 2, 2)), 2, "-++") - 1.0 / (16 * kS2)) < 1e-14);

  for (const auto& [name, st] : pool::qubit_pool(3)) {
    for (int k : {2, 3}) {
      const ComplexMatrix first = oracle::stage_one(st.matrix(), {2, 2, 2}, k);
      const MomentPrimitives p = primitives(st, k);
      for (const SignConfig& c : SignConfig::all()) {
        const NuVector nu = nu_vector(p, c, reg);
        const auto expect = oracle::second_stage(first, signs_of(c));
        double total = 0;
        for (std::size_t i = 0; i < 8; ++i) {
          CHECK_MESSAGE(std::abs(nu.nu[i] / 8 - expect[i]) < 1e-10, name << " k=" << k << " " << c.label());
          CHECK(nu.nu[i] >= -1e-12);
          total += nu.nu[i];
        }
        CHECK(std::abs(total - 8.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("group expectations") {
  const TripartiteState b = bound_state();
  CHECK(std::abs(group_expectations(b, 4, MeasurementGroup::stage_one()).zzz - 17.0 / 1296) < 1e-15);
  CHECK(std::abs(group_expectations(b, 8, MeasurementGroup::parse("-++")).zzz - 193.0 / (1679616 * kS2)) < 1e-15);
  for (const auto& [name, st] : pool::qubit_pool(6)) {
    const GroupReadout r = group_expectations(st, 2, MeasurementGroup::stage_one());
    CHECK(std::abs(r.zzz - oracle::trace_power(st.matrix(), 2)) < 1e-14);
    for (int k = 2; k <= 5; ++k) {
      const GroupReadout rk = group_expectations(st, k, MeasurementGroup::stage_one());
      for (int x = 0; x < 3; ++x) {
        std::vector<bool> keep(3, false);
        keep[static_cast<std::size_t>(x)] = true;
        const double direct = oracle::trace_power(oracle::partial_trace(st.matrix(), {2, 2, 2}, keep), k);
        CHECK(std::abs(rk.z[static_cast<std::size_t>(x)] - direct) < 1e-10);
      }
    }
  }
}

TEST_CASE("measurement groups and modes") {
  CHECK(MeasurementGroup::parse("1").is_stage_one());
  CHECK(MeasurementGroup::parse("-+-").config() == SignConfig::parse("-+-"));
  CHECK_THROWS_AS(MeasurementGroup::stage_one().config(), Error);
  CHECK(parse_mode("a-side") == DetectionMode::kASide);
  CHECK_THROWS_AS(parse_mode("sideways"), Error);
  for (int d = 3; d <= 18; ++d) {
    CHECK(parameter_count(DetectionMode::kFull, d) == 4 * (d - 2) + 1);
    for (DetectionMode m : {DetectionMode::kASide, DetectionMode::kBSide, DetectionMode::kCSide, DetectionMode::kMajorization}) {
      CHECK(parameter_count(m, d) == 2 * d - 3);
    }
  }
}

TEST_CASE("recovery on the bound state") {
  const PTMomentTable t = recover_pt_moments(measure_analytic(bound_state(), DetectionMode::kFull, 8), DetectionMode::kFull);
  CHECK(std::abs(t.get(MatrixLabel::kABC_TA, 3).value - 1.0 / 36) < 1e-15);
  CHECK(std::abs(t.get(MatrixLabel::kABC_TB, 3).value - 1.0 / 18) < 1e-15);
  for (MatrixLabel l : {MatrixLabel::kABC_TA, MatrixLabel::kABC_TB, MatrixLabel::kABC_TC}) {
    CHECK(std::abs(t.get(l, 2).value - 2.0 / 9) < 1e-15);
  }
  CHECK(t.exact());

  // The same arithmetic on the printed k = 3 readouts.
  MeasurementSet printed(DimTriple(2, 2, 2));
  for (int k = 2; k <= 8; ++k) {
    for (const auto& g : groups_for(DetectionMode::kASide)) {
      if (k >= g.first_k()) printed.set(g, k, group_expectations(bound_state(), k, g));
    }
  }
  GroupReadout r1 = printed.get(MeasurementGroup::stage_one(), 3);
  GroupReadout r2 = printed.get(MeasurementGroup::parse("-++"), 3);
  r1.zzz = 7.0 / 144;
  r2.zzz = 5.0 / (144 * kS2);
  printed.set(MeasurementGroup::stage_one(), 3, r1);
  printed.set(MeasurementGroup::parse("-++"), 3, r2);
  const PTMomentTable tp = recover_pt_moments(printed, DetectionMode::kASide);
  CHECK(std::abs(tp.get(MatrixLabel::kABC_TA, 3).value - 1.0 / 36) < 1e-15);
}

TEST_CASE("recovery reports the missing setting") {
  MeasurementSet m = measure_analytic(bound_state(), DetectionMode::kFull, 8);
  MeasurementSet partial(m.dims());
  for (const auto& [g, k, r] : m.entries()) {
    if (!(g.label() == "-+-" && k == 5)) partial.set(g, k, r);
  }
  try {
    recover_pt_moments(partial, DetectionMode::kFull);
    FAIL("expected missing-data");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMissingData);
    CHECK(std::string(e.what()).find("-+-") != std::string::npos);
    CHECK(std::string(e.what()).find("k=5") != std::string::npos);
  }
}

TEST_CASE("recovered moments equal direct trace powers on random states") {
  CalibrationRegistry reg;
  reg.calibrate(SignConfig::parse("+++"));
  for (std::uint64_t s = 0; s < 100; ++s) {
    const TripartiteState st = random_state(DimTriple(2, 2, 2), 1 + static_cast<int>(s % 8), 9000 + s);
    for (DetectionMode mode : {DetectionMode::kFull, DetectionMode::kASide, DetectionMode::kBSide,
                               DetectionMode::kCSide, DetectionMode::kMajorization}) {
      const PTMomentTable t = recover_pt_moments(measure_analytic(st, mode, 8, reg), mode, reg);
      for (const auto& [l, k, e] : t.entries()) {
        const double direct = oracle::trace_power(oracle_label(st.matrix(), l), k);
        CHECK(std::abs(e.value - direct) < 1e-9);
      }
    }
  }
}

TEST_CASE("shot measurements are reproducible") {
  const MeasurementSet a = measure_shots(bound_state(), DetectionMode::kASide, 8, 1000, 42);
  const MeasurementSet b = measure_shots(bound_state(), DetectionMode::kASide, 8, 1000, 42);
  for (const auto& [g, k, r] : a.entries()) {
    CHECK(r.zzz == b.get(g, k).zzz);
    CHECK(r.shots == 1000);
  }
  std::set<std::uint64_t> seeds;
  for (const auto& g : groups_for(DetectionMode::kFull)) {
    for (int k = 2; k <= 8; ++k) seeds.insert(setting_seed(42, g, k));
  }
  CHECK(seeds.size() == 28);
  CHECK_THROWS_AS(measure_shots(bound_state(), DetectionMode::kASide, 8, 0, 1), Error);
}
