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

// Spectra from trace powers, negativities, majorization checks and the
// qubit-only tripartite inference built on them.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tripneg/moment_engine.hpp"
#include "tripneg/tensor_core.hpp"

namespace tripneg {

inline constexpr double kDetectionThreshold = 1e-7;
inline constexpr double kNegativityClampTol = 1e-9;
inline constexpr int kConditioningDim = 12;

struct NewtonOptions {
  /// Largest imaginary part tolerated on a root after cluster handling;
  /// above it the call throws. Set to infinity to project and warn instead.
  double imag_tol = 1e-6;
  /// Round-trip residual above which the result carries a warning.
  double residual_tol = 1e-6;
  /// Merge the split images of a repeated root back into one real value.
  bool collapse_clusters = true;
};

struct SpectrumResult {
  Spectrum spectrum;
  /// max_k |sum_i lambda_i^k - p_k|.
  double residual = 0.0;
  /// Largest imaginary part discarded when projecting to the real axis.
  double max_imag = 0.0;
  /// Roots replaced by a cluster centroid.
  int collapsed = 0;
  bool warning = false;
};

/// Spectrum of an n x n hermitian matrix from p_1..p_n (p[0] = p_1).
/// Throws kIllConditioned when a root keeps an imaginary part above tolerance.
SpectrumResult newton_spectrum(const std::vector<double>& power_sums, int n,
                               const NewtonOptions& options = {});

/// Elementary symmetric polynomials e_0..e_n from p_1..p_n.
std::vector<long double> elementary_symmetric(const std::vector<double>& power_sums, int n);

/// A small set of spectral atoms with multiplicities, fitted to noisy
/// power sums p_0..p_K with standard errors.
struct AtomicSpectrum {
  std::vector<double> atoms;
  std::vector<double> weights;
  int rank = 0;
  /// Hankel singular-value cut used to pick the rank.
  double threshold = 0.0;

  /// (sum_i w_i |x_i| - 1) / 2.
  double negativity() const;
  double min_atom() const;
};

/// Noise-aware matrix-pencil fit: numerical rank from the Hankel matrix of
/// the moments against their propagated noise, atoms from the pencil,
/// weights by weighted least squares.
AtomicSpectrum pencil_spectrum(const std::vector<double>& power_sums,
                               const std::vector<double>& sigmas);

/// (sum |lambda| - 1) / 2; values in [-1e-9, 0) are returned as 0.
/// Throws kInvalidSpectrum when the spectrum's trace is off by more than 1e-6.
double negativity(const Spectrum& spectrum);
double negativity_raw(const Spectrum& spectrum);

enum class Split { kA_BC, kB_AC, kC_AB, kA_B, kA_C, kB_C };

inline constexpr std::array<Split, 6> kAllSplits = {Split::kA_BC, Split::kB_AC, Split::kC_AB,
                                                    Split::kA_B,  Split::kA_C,  Split::kB_C};

const char* split_name(Split s);
/// The partially transposed matrix whose spectrum decides the split.
MatrixLabel split_label(Split s);

enum class Verdict { kEntangled, kPPT };
enum class Provenance { kLoccPipeline, kDirectOracle };
enum class TripartiteFlag { kDetected, kNotInferable, kNotApplicable };

const char* verdict_name(Verdict v);
const char* provenance_name(Provenance p);
const char* flag_name(TripartiteFlag f);

struct SplitResult {
  Split split = Split::kA_BC;
  /// Signed value before clamping.
  double raw = 0.0;
  /// Clamped value used for the verdict.
  double value = 0.0;
  Verdict verdict = Verdict::kPPT;
  /// Reconstructed spectrum (atoms when estimated from shots).
  Spectrum spectrum;
  /// Multiplicities of the atoms; empty for a full spectrum.
  std::vector<double> weights;
  double residual = 0.0;
  bool warning = false;
};

struct NegativityReport {
  Provenance provenance = Provenance::kDirectOracle;
  DimTriple dims;
  std::optional<DetectionMode> mode;
  std::vector<SplitResult> splits;
  /// Measured (group, k) settings; 0 for the direct oracle.
  int parameter_count = 0;
  double threshold = kDetectionThreshold;
  /// Shots per setting; 0 for exact expectations.
  std::uint64_t shots = 0;
  std::optional<PTMomentTable> moments;
  std::vector<std::string> warnings;
  TripartiteFlag tripartite = TripartiteFlag::kNotApplicable;

  bool has(Split s) const;
  /// Throws kMissingData when the split was not part of the run.
  const SplitResult& at(Split s) const;
};

/// Splits a detection mode reports.
std::vector<Split> splits_for(DetectionMode mode);

/// Detection threshold for a run with `shots` per setting (0 = exact).
double detection_threshold(std::uint64_t shots);

NegativityReport negativity_set_direct(const TripartiteState& rho);

enum class PipelinePath { kAnalytic, kGate, kShots };

const char* path_name(PipelinePath p);
PipelinePath parse_path(std::string_view name);

struct LoccOptions {
  PipelinePath path = PipelinePath::kAnalytic;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  NetworkOptions network;
  NewtonOptions newton;
};

/// Builds the report from an already measured set (any path).
NegativityReport negativity_set_from_measurements(const MeasurementSet& m, DetectionMode mode,
                                                  const NewtonOptions& newton = {},
                                                  const CalibrationRegistry& registry =
                                                      CalibrationRegistry::global());

/// Measures `rho` along options.path for k = 2..d_max and reconstructs the
/// mode's negativities. d_max must equal the total dimension.
NegativityReport negativity_set_via_locc(const TripartiteState& rho, int d_max, DetectionMode mode,
                                         const LoccOptions& options = {},
                                         const CalibrationRegistry& registry =
                                             CalibrationRegistry::global());

/// x majorized by y after zero padding and non-increasing sort.
/// Throws kInvalidComparison when the totals differ by more than 1e-9.
bool majorization_prec(const Spectrum& x, const Spectrum& y);

struct MajorizationRelation {
  MatrixLabel lhs;
  MatrixLabel rhs;
  bool holds = true;
};

struct MajorizationReport {
  Provenance provenance = Provenance::kDirectOracle;
  std::map<MatrixLabel, Spectrum> spectra;
  std::vector<MajorizationRelation> relations;
  int parameter_count = 0;
  std::vector<std::string> warnings;

  /// True when some relation fails, which certifies entanglement.
  bool detected() const;
};

/// The twelve relations lambda(ABC) < lambda(X), lambda(ABC) < lambda(XY),
/// lambda(XY) < lambda(X), lambda(XY) < lambda(Y).
std::vector<std::pair<MatrixLabel, MatrixLabel>> majorization_relations();

MajorizationReport majorization_from_spectra(std::map<MatrixLabel, Spectrum> spectra,
                                             Provenance provenance);

enum class MajorizationSource { kOracle, kLocc };

/// The locc source needs the (+++) configuration in `registry`.
MajorizationReport majorization_report(const TripartiteState& rho, MajorizationSource source,
                                       const LoccOptions& options = {},
                                       const CalibrationRegistry& registry =
                                           CalibrationRegistry::global());

/// Qubit-only inference that some tripartite entanglement is present.
TripartiteFlag genuine_tripartite_flag(const NegativityReport& report, const DimTriple& dims);

}  // namespace tripneg
