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

// Closed-form ancilla statistics of the two-stage network and the inversion
// of measured expectations into trace powers of partial transposes.
//
// Primitive moments for copy count k:
//   alpha_1..4  = Tr rA^k +- Tr rB^k +- Tr rC^k
//   beta_1..3   = Tr rAB^k / 2, Tr rAC^k / 2, Tr rBC^k / 2
//   beta_4..6   = Tr (rAB^TA)^k / 2, Tr (rAC^TA)^k / 2, Tr (rBC^TB)^k / 2
//   gamma_1..4  = Tr r^k / 4, Tr (r^TA)^k / 4, Tr (r^TB)^k / 4, Tr (r^TC)^k / 4

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "tripneg/locc_network.hpp"
#include "tripneg/state_factory.hpp"
#include "tripneg/tensor_core.hpp"

namespace tripneg {

/// Matrices whose trace powers the pipeline recovers.
enum class MatrixLabel {
  kABC,
  kABC_TA,
  kABC_TB,
  kABC_TC,
  kAB,
  kAB_TA,
  kAC,
  kAC_TA,
  kBC,
  kBC_TB,
  kA,
  kB,
  kC,
};

inline constexpr std::array<MatrixLabel, 13> kAllMatrixLabels = {
    MatrixLabel::kABC, MatrixLabel::kABC_TA, MatrixLabel::kABC_TB, MatrixLabel::kABC_TC,
    MatrixLabel::kAB,  MatrixLabel::kAB_TA,  MatrixLabel::kAC,     MatrixLabel::kAC_TA,
    MatrixLabel::kBC,  MatrixLabel::kBC_TB,  MatrixLabel::kA,      MatrixLabel::kB,
    MatrixLabel::kC};

std::string label_name(MatrixLabel label);
std::optional<MatrixLabel> parse_label(std::string_view name);
int label_dimension(MatrixLabel label, const DimTriple& dims);
/// The matrix itself, built from the state by partial trace/transpose.
ComplexMatrix label_matrix(const TripartiteState& rho, MatrixLabel label);

/// Trace powers of all thirteen labelled matrices for k = 0..kmax,
/// computed directly from the density matrix.
class DirectMoments {
 public:
  DirectMoments(const TripartiteState& rho, int kmax);

  int kmax() const { return kmax_; }
  double get(MatrixLabel label, int k) const;

 private:
  int kmax_;
  std::map<MatrixLabel, std::vector<double>> powers_;
};

struct MomentPrimitives {
  int k = 1;
  std::array<double, 4> alpha{};
  std::array<double, 6> beta{};
  std::array<double, 4> gamma{};
};

MomentPrimitives primitives(const TripartiteState& rho, int k);
MomentPrimitives primitives(const DirectMoments& moments, int k);

/// mu_1..mu_14 (stored 0-based). mu_1..mu_8 are 8 x the diagonal of the
/// stage-one ancilla state, mu_9..mu_14 its off-diagonal weights.
struct MuVector {
  std::array<double, 14> mu{};
};

MuVector mu_vector(const MomentPrimitives& p);

/// The 8x8 stage-one ancilla matrix assembled from the mu values.
ComplexMatrix stage_one_matrix(const MuVector& mu);

/// Coefficient pattern of a stage-two configuration: the sign attached to
/// each gamma_i in the zzz readout (times 1/sqrt2), and which beta index
/// (0-based) each ancilla pair (ab, ac, bc) reports.
struct ConfigPattern {
  std::array<int, 4> gamma_signs{};
  std::array<int, 3> pair_beta{};

  friend bool operator==(const ConfigPattern&, const ConfigPattern&) = default;
};

/// Determines the pattern for `config` from the gate-level second stage
/// driven by synthetic stage-one states. Throws kInternal if the
/// calibration system is singular or the readouts do not fit.
ConfigPattern calibrate_config(SignConfig config);

/// Write-once store of configuration patterns. The three configurations
/// with published readout relations (-++, -+-, ++-) are preloaded; every
/// other configuration must be calibrated before use.
class CalibrationRegistry {
 public:
  CalibrationRegistry();

  std::optional<ConfigPattern> find(SignConfig config) const;
  /// Throws kNotCalibrated when `config` has no pattern yet.
  ConfigPattern require(SignConfig config) const;
  /// Runs calibrate_config on first use and stores the result.
  ConfigPattern calibrate(SignConfig config);

  static CalibrationRegistry& global();

 private:
  mutable std::mutex mutex_;
  std::array<std::optional<ConfigPattern>, 8> patterns_;
};

/// The built-in patterns for (-++), (-+-), (++-).
std::optional<ConfigPattern> published_pattern(SignConfig config);

struct NuVector {
  std::array<double, 8> nu{};
  SignConfig config;
  /// sum_i gamma_signs[i] * gamma_i.
  double gamma_combo = 0.0;
};

NuVector nu_vector(const MomentPrimitives& p, SignConfig config,
                   const CalibrationRegistry& registry = CalibrationRegistry::global());

/// Stage one ("1") or a stage-two configuration.
class MeasurementGroup {
 public:
  static MeasurementGroup stage_one() { return MeasurementGroup(); }
  static MeasurementGroup second(SignConfig config) { return MeasurementGroup(config); }
  /// Accepts "1" or a sign label such as "-++".
  static MeasurementGroup parse(std::string_view label);

  bool is_stage_one() const { return !config_.has_value(); }
  SignConfig config() const;
  std::string label() const;
  /// 0 for stage one, 1 + config index otherwise.
  int key() const { return config_ ? 1 + config_->index() : 0; }
  /// Smallest copy count at which the group is measured.
  int first_k() const { return is_stage_one() ? 2 : 3; }

  friend bool operator==(const MeasurementGroup&, const MeasurementGroup&) = default;

 private:
  MeasurementGroup() = default;
  explicit MeasurementGroup(SignConfig c) : config_(c) {}
  std::optional<SignConfig> config_;
};

/// Expectations read from one (group, k) setting.
struct GroupReadout {
  double zzz = 0.0;
  std::array<double, 3> zz{};  // ab, ac, bc
  std::array<double, 3> z{};   // a, b, c
  /// Number of shots behind the estimate; 0 means exact.
  std::uint64_t shots = 0;
};

GroupReadout readout_from(const AncillaDistribution& dist, std::uint64_t shots = 0);

/// Standard error of an estimated +-1 observable with mean `value`.
double readout_sigma(double value, std::uint64_t shots);

enum class DetectionMode { kFull, kASide, kBSide, kCSide, kMajorization };

const char* mode_name(DetectionMode mode);
DetectionMode parse_mode(std::string_view name);
std::vector<MeasurementGroup> groups_for(DetectionMode mode);
/// Number of measured (group, k) settings for a d-dimensional state.
int parameter_count(DetectionMode mode, int d);
/// Matrices whose spectra the mode reconstructs.
std::vector<MatrixLabel> required_labels(DetectionMode mode);

class MeasurementSet {
 public:
  MeasurementSet() = default;
  explicit MeasurementSet(DimTriple dims) : dims_(dims) {}

  const DimTriple& dims() const { return dims_; }
  void set(const MeasurementGroup& group, int k, const GroupReadout& readout);
  bool has(const MeasurementGroup& group, int k) const;
  /// Throws kMissingData naming the absent (group, k).
  const GroupReadout& get(const MeasurementGroup& group, int k) const;
  std::size_t size() const { return readouts_.size(); }

  /// (group, k, readout) in a stable order.
  std::vector<std::tuple<MeasurementGroup, int, GroupReadout>> entries() const;

 private:
  DimTriple dims_;
  std::map<std::pair<int, int>, GroupReadout> readouts_;
};

/// Exact outcome distribution of one setting from the closed forms.
AncillaDistribution analytic_distribution(const MomentPrimitives& p, const MeasurementGroup& group,
                                          const CalibrationRegistry& registry =
                                              CalibrationRegistry::global());

GroupReadout group_expectations(const TripartiteState& rho, int k, const MeasurementGroup& group,
                                const CalibrationRegistry& registry = CalibrationRegistry::global());

/// All settings of `mode` for k up to kmax from the closed forms.
MeasurementSet measure_analytic(const TripartiteState& rho, DetectionMode mode, int kmax,
                                const CalibrationRegistry& registry = CalibrationRegistry::global());

/// Same settings from the gate-level network (subject to its size cap).
MeasurementSet measure_gate(const TripartiteState& rho, DetectionMode mode, int kmax,
                            const NetworkOptions& options = {});

/// Same settings estimated from `shots` samples of each exact distribution.
/// Each setting draws from its own stream derived from `seed`.
MeasurementSet measure_shots(const TripartiteState& rho, DetectionMode mode, int kmax,
                             std::uint64_t shots, std::uint64_t seed,
                             const CalibrationRegistry& registry = CalibrationRegistry::global());

/// Recovered Tr(M^k) with its propagated standard error (0 when exact).
struct MomentEntry {
  double value = 0.0;
  double sigma = 0.0;
};

class PTMomentTable {
 public:
  void set(MatrixLabel label, int k, MomentEntry entry);
  bool has(MatrixLabel label, int k) const;
  MomentEntry get(MatrixLabel label, int k) const;
  /// p_0..p_n for the label (p_0 is the matrix dimension).
  std::vector<double> power_sums(MatrixLabel label, int n) const;
  std::vector<double> sigmas(MatrixLabel label, int n) const;
  bool exact() const;
  std::vector<std::tuple<MatrixLabel, int, MomentEntry>> entries() const;

 private:
  std::map<std::pair<MatrixLabel, int>, MomentEntry> entries_;
};

/// Inverts the readouts of `mode` into trace powers for every required
/// label, k = 1..dimension of that label. Throws kMissingData for the first
/// absent (group, k).
PTMomentTable recover_pt_moments(const MeasurementSet& m, DetectionMode mode,
                                 const CalibrationRegistry& registry = CalibrationRegistry::global());

/// Seed of the shot stream for one setting (splitmix64 of the inputs).
std::uint64_t setting_seed(std::uint64_t seed, const MeasurementGroup& group, int k);

}  // namespace tripneg
