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

#include "tripneg/moment_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tripneg/error.hpp"

namespace tripneg {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

std::string setting_name(const MeasurementGroup& group, int k) {
  std::ostringstream os;
  os << "group " << group.label() << " at k=" << k;
  return os.str();
}

// Which gamma index a label of the tripartite family corresponds to.
std::optional<int> gamma_index(MatrixLabel label) {
  switch (label) {
    case MatrixLabel::kABC: return 0;
    case MatrixLabel::kABC_TA: return 1;
    case MatrixLabel::kABC_TB: return 2;
    case MatrixLabel::kABC_TC: return 3;
    default: return std::nullopt;
  }
}

struct PairLabel {
  int pair;  // 0 = ab, 1 = ac, 2 = bc
  bool transposed;
};

std::optional<PairLabel> pair_label(MatrixLabel label) {
  switch (label) {
    case MatrixLabel::kAB: return PairLabel{0, false};
    case MatrixLabel::kAB_TA: return PairLabel{0, true};
    case MatrixLabel::kAC: return PairLabel{1, false};
    case MatrixLabel::kAC_TA: return PairLabel{1, true};
    case MatrixLabel::kBC: return PairLabel{2, false};
    case MatrixLabel::kBC_TB: return PairLabel{2, true};
    default: return std::nullopt;
  }
}

std::optional<Party> single_label(MatrixLabel label) {
  switch (label) {
    case MatrixLabel::kA: return Party::kA;
    case MatrixLabel::kB: return Party::kB;
    case MatrixLabel::kC: return Party::kC;
    default: return std::nullopt;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double quad(double a, double b) { return std::sqrt(a * a + b * b); }

}  // namespace

std::string label_name(MatrixLabel label) {
  switch (label) {
    case MatrixLabel::kABC: return "ABC";
    case MatrixLabel::kABC_TA: return "ABC^TA";
    case MatrixLabel::kABC_TB: return "ABC^TB";
    case MatrixLabel::kABC_TC: return "ABC^TC";
    case MatrixLabel::kAB: return "AB";
    case MatrixLabel::kAB_TA: return "AB^TA";
    case MatrixLabel::kAC: return "AC";
    case MatrixLabel::kAC_TA: return "AC^TA";
    case MatrixLabel::kBC: return "BC";
    case MatrixLabel::kBC_TB: return "BC^TB";
    case MatrixLabel::kA: return "A";
    case MatrixLabel::kB: return "B";
    case MatrixLabel::kC: return "C";
  }
  return "?";
}

std::optional<MatrixLabel> parse_label(std::string_view name) {
  for (MatrixLabel l : kAllMatrixLabels) {
    if (label_name(l) == name) return l;
  }
  return std::nullopt;
}

int label_dimension(MatrixLabel label, const DimTriple& dims) {
  if (gamma_index(label)) return dims.total();
  if (auto p = pair_label(label)) {
    switch (p->pair) {
      case 0: return dims.a * dims.b;
      case 1: return dims.a * dims.c;
      default: return dims.b * dims.c;
    }
  }
  return dims.local(*single_label(label));
}

ComplexMatrix label_matrix(const TripartiteState& rho, MatrixLabel label) {
  const ComplexMatrix& m = rho.matrix();
  const DimTriple& d = rho.dims();
  switch (label) {
    case MatrixLabel::kABC: return m;
    case MatrixLabel::kABC_TA: return partial_transpose(m, d, Party::kA);
    case MatrixLabel::kABC_TB: return partial_transpose(m, d, Party::kB);
    case MatrixLabel::kABC_TC: return partial_transpose(m, d, Party::kC);
    case MatrixLabel::kAB: return partial_trace(m, d, {Party::kA, Party::kB});
    case MatrixLabel::kAC: return partial_trace(m, d, {Party::kA, Party::kC});
    case MatrixLabel::kBC: return partial_trace(m, d, {Party::kB, Party::kC});
    case MatrixLabel::kAB_TA: {
      const std::vector<int> pd{d.a, d.b};
      return partial_transpose(partial_trace(m, d, {Party::kA, Party::kB}), pd, 0);
    }
    case MatrixLabel::kAC_TA: {
      const std::vector<int> pd{d.a, d.c};
      return partial_transpose(partial_trace(m, d, {Party::kA, Party::kC}), pd, 0);
    }
    case MatrixLabel::kBC_TB: {
      const std::vector<int> pd{d.b, d.c};
      return partial_transpose(partial_trace(m, d, {Party::kB, Party::kC}), pd, 0);
    }
    case MatrixLabel::kA: return partial_trace(m, d, {Party::kA});
    case MatrixLabel::kB: return partial_trace(m, d, {Party::kB});
    case MatrixLabel::kC: return partial_trace(m, d, {Party::kC});
  }
  throw Error(ErrorKind::kInternal, "unknown matrix label");
}

DirectMoments::DirectMoments(const TripartiteState& rho, int kmax) : kmax_(kmax) {
  if (kmax < 1) throw Error(ErrorKind::kInvalidParams, "DirectMoments: kmax must be >= 1");
  for (MatrixLabel l : kAllMatrixLabels) {
    powers_.emplace(l, trace_powers(label_matrix(rho, l), kmax));
  }
}

double DirectMoments::get(MatrixLabel label, int k) const {
  if (k < 0 || k > kmax_) throw Error(ErrorKind::kInvalidParams, "DirectMoments: k out of range");
  return powers_.at(label)[static_cast<std::size_t>(k)];
}

MomentPrimitives primitives(const DirectMoments& dm, int k) {
  using L = MatrixLabel;
  MomentPrimitives p;
  p.k = k;
  const double a = dm.get(L::kA, k);
  const double b = dm.get(L::kB, k);
  const double c = dm.get(L::kC, k);
  p.alpha = {a + b + c, a + b - c, a - b + c, a - b - c};
  p.beta = {dm.get(L::kAB, k) / 2,    dm.get(L::kAC, k) / 2,    dm.get(L::kBC, k) / 2,
            dm.get(L::kAB_TA, k) / 2, dm.get(L::kAC_TA, k) / 2, dm.get(L::kBC_TB, k) / 2};
  p.gamma = {dm.get(L::kABC, k) / 4, dm.get(L::kABC_TA, k) / 4, dm.get(L::kABC_TB, k) / 4,
             dm.get(L::kABC_TC, k) / 4};
  return p;
}

MomentPrimitives primitives(const TripartiteState& rho, int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidParams, "primitives: k must be >= 1");
  return primitives(DirectMoments(rho, k), k);
}

MuVector mu_vector(const MomentPrimitives& p) {
  const auto& a = p.alpha;
  const auto& b = p.beta;
  const auto& g = p.gamma;
  const double gs = g[0] + g[1] + g[2] + g[3];
  // Pair sums beta_plain + beta_transposed for (ab, ac, bc).
  const double ab = b[0] + b[3];
  const double ac = b[1] + b[4];
  const double bc = b[2] + b[5];

  MuVector m;
  auto& mu = m.mu;
  mu[0] = 1 + a[0] + ab + ac + bc + gs;
  mu[1] = 1 + a[1] + ab - ac - bc - gs;
  mu[2] = 1 + a[2] - ab + ac - bc - gs;
  mu[3] = 1 + a[3] - ab - ac + bc + gs;
  mu[4] = 1 - a[3] - ab - ac + bc - gs;
  mu[5] = 1 - a[2] - ab + ac - bc + gs;
  mu[6] = 1 - a[1] + ab - ac - bc + gs;
  mu[7] = 1 - a[0] + ab + ac + bc - gs;
  mu[8] = b[2] - b[5] + g[0] + g[1] - g[2] - g[3];
  mu[9] = b[1] - b[4] + g[0] - g[1] + g[2] - g[3];
  mu[10] = b[0] - b[3] + g[0] - g[1] - g[2] + g[3];
  mu[11] = b[0] - b[3] - g[0] + g[1] + g[2] - g[3];
  mu[12] = b[1] - b[4] - g[0] + g[1] - g[2] + g[3];
  mu[13] = b[2] - b[5] - g[0] - g[1] + g[2] + g[3];
  return m;
}

ComplexMatrix stage_one_matrix(const MuVector& mv) {
  const auto& m = mv.mu;
  // Entry layout: +-(index into mu), 0 marks a structural zero.
  static constexpr int kLayout[8][8] = {
      {1, 0, 0, 9, 0, 10, 11, 0},      {0, 2, -9, 0, -10, 0, 0, 12},
      {0, -9, 3, 0, -11, 0, 0, 13},    {9, 0, 0, 4, 0, -12, -13, 0},
      {0, -10, -11, 0, 5, 0, 0, 14},   {10, 0, 0, -12, 0, 6, -14, 0},
      {11, 0, 0, -13, 0, -14, 7, 0},   {0, 12, 13, 0, 14, 0, 0, 8},
  };
  ComplexMatrix out = ComplexMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int e = kLayout[i][j];
      if (e == 0) continue;
      const double v = m[static_cast<std::size_t>(std::abs(e) - 1)];
      out(i, j) = (e > 0 ? v : -v) / 8.0;
    }
  }
  return out;
}

std::optional<ConfigPattern> published_pattern(SignConfig config) {
  const std::string l = config.label();
  if (l == "-++") return ConfigPattern{{+1, -1, +1, +1}, {0, 1, 5}};
  if (l == "-+-") return ConfigPattern{{+1, +1, -1, +1}, {0, 4, 2}};
  if (l == "++-") return ConfigPattern{{+1, +1, +1, -1}, {3, 1, 2}};
  return std::nullopt;
}

ConfigPattern calibrate_config(SignConfig config) {
  // Synthetic stage-one states: only gamma (resp. beta) moments non-zero.
  // Small magnitudes keep every synthetic matrix a valid density matrix.
  const Eigen::Matrix4d gammas{{0.05, 0.01, 0.02, 0.03},
                               {0.01, 0.05, 0.03, 0.02},
                               {0.02, 0.03, 0.05, 0.01},
                               {0.03, 0.02, 0.01, 0.05}};
  Eigen::Vector4d readouts;
  for (int j = 0; j < 4; ++j) {
    MomentPrimitives p;
    for (int i = 0; i < 4; ++i) p.gamma[static_cast<std::size_t>(i)] = gammas(j, i);
    const AncillaState3 synthetic(stage_one_matrix(mu_vector(p)));
    readouts(j) = kSqrt2 * measure_zzz(second_stage(synthetic, config));
  }
  Eigen::FullPivLU<Eigen::Matrix4d> lu(gammas);
  if (!lu.isInvertible()) {
    throw Error(ErrorKind::kInternal, "calibration system is singular");
  }
  const Eigen::Vector4d eps = lu.solve(readouts);

  ConfigPattern pattern;
  for (int i = 0; i < 4; ++i) {
    const double s = std::round(eps(i));
    if (std::abs(std::abs(s) - 1.0) > 0 || std::abs(eps(i) - s) > 1e-9) {
      std::ostringstream os;
      os << "calibration of " << config.label() << ": gamma coefficient " << eps(i)
         << " is not +-1";
      throw Error(ErrorKind::kInternal, os.str());
    }
    pattern.gamma_signs[static_cast<std::size_t>(i)] = static_cast<int>(s);
  }

  MomentPrimitives p;
  p.beta = {0.010, 0.020, 0.030, 0.040, 0.050, 0.060};
  const AncillaDistribution dist = second_stage(AncillaState3(stage_one_matrix(mu_vector(p))), config);
  for (int pair = 0; pair < 3; ++pair) {
    const double r = measure_zz(dist, static_cast<AncillaPair>(pair));
    int match = -1;
    for (int b = 0; b < 6; ++b) {
      if (std::abs(r - p.beta[static_cast<std::size_t>(b)]) < 1e-9) {
        if (match >= 0) throw Error(ErrorKind::kInternal, "calibration: ambiguous pair readout");
        match = b;
      }
    }
    if (match < 0) {
      std::ostringstream os;
      os << "calibration of " << config.label() << ": pair "
         << pair_name(static_cast<AncillaPair>(pair)) << " readout " << r
         << " matches no beta";
      throw Error(ErrorKind::kInternal, os.str());
    }
    pattern.pair_beta[static_cast<std::size_t>(pair)] = match;
  }
  return pattern;
}

CalibrationRegistry::CalibrationRegistry() {
  for (const SignConfig& c : SignConfig::all()) {
    patterns_[static_cast<std::size_t>(c.index())] = published_pattern(c);
  }
}

std::optional<ConfigPattern> CalibrationRegistry::find(SignConfig config) const {
  std::lock_guard lock(mutex_);
  return patterns_[static_cast<std::size_t>(config.index())];
}

ConfigPattern CalibrationRegistry::require(SignConfig config) const {
  if (auto p = find(config)) return *p;
  throw Error(ErrorKind::kNotCalibrated,
              "configuration " + config.label() + " has not been calibrated");
}

ConfigPattern CalibrationRegistry::calibrate(SignConfig config) {
  if (auto p = find(config)) return *p;
  const ConfigPattern fresh = calibrate_config(config);
  std::lock_guard lock(mutex_);
  auto& slot = patterns_[static_cast<std::size_t>(config.index())];
  if (!slot) slot = fresh;
  return *slot;
}

CalibrationRegistry& CalibrationRegistry::global() {
  static CalibrationRegistry registry;
  return registry;
}

NuVector nu_vector(const MomentPrimitives& p, SignConfig config,
                   const CalibrationRegistry& registry) {
  const ConfigPattern pat = registry.require(config);
  NuVector out;
  out.config = config;
  for (int i = 0; i < 4; ++i) {
    out.gamma_combo += pat.gamma_signs[static_cast<std::size_t>(i)] * p.gamma[static_cast<std::size_t>(i)];
  }
  // Tr rho_X^k recovered from the alpha combinations.
  const std::array<double, 3> single = {(p.alpha[0] + p.alpha[3]) / 2, (p.alpha[0] - p.alpha[2]) / 2,
                                        (p.alpha[0] - p.alpha[1]) / 2};
  std::array<double, 3> pair{};
  for (int q = 0; q < 3; ++q) {
    pair[static_cast<std::size_t>(q)] = p.beta[static_cast<std::size_t>(pat.pair_beta[static_cast<std::size_t>(q)])];
  }
  for (int o = 0; o < 8; ++o) {
    const int sa = (o & 4) ? -1 : 1;
    const int sb = (o & 2) ? -1 : 1;
    const int sc = (o & 1) ? -1 : 1;
    double v = 1.0;
    v += (sa * single[0] + sb * single[1] + sc * single[2]) / kSqrt2;
    v += sa * sb * pair[0] + sa * sc * pair[1] + sb * sc * pair[2];
    v += sa * sb * sc * out.gamma_combo / kSqrt2;
    out.nu[static_cast<std::size_t>(o)] = v;
  }
  return out;
}

MeasurementGroup MeasurementGroup::parse(std::string_view label) {
  if (label == "1") return stage_one();
  return second(SignConfig::parse(label));
}

SignConfig MeasurementGroup::config() const {
  if (!config_) throw Error(ErrorKind::kInvalidParams, "stage-one group has no sign configuration");
  return *config_;
}

std::string MeasurementGroup::label() const { return config_ ? config_->label() : "1"; }

GroupReadout readout_from(const AncillaDistribution& dist, std::uint64_t shots) {
  GroupReadout r;
  r.zzz = measure_zzz(dist);
  for (int q = 0; q < 3; ++q) r.zz[static_cast<std::size_t>(q)] = measure_zz(dist, static_cast<AncillaPair>(q));
  for (int q = 0; q < 3; ++q) r.z[static_cast<std::size_t>(q)] = measure_z(dist, static_cast<Party>(q));
  r.shots = shots;
  return r;
}

double readout_sigma(double value, std::uint64_t shots) {
  if (shots == 0) return 0.0;
  return std::sqrt(std::max(0.0, 1.0 - value * value) / static_cast<double>(shots));
}

const char* mode_name(DetectionMode mode) {
  switch (mode) {
    case DetectionMode::kFull: return "full";
    case DetectionMode::kASide: return "a-side";
    case DetectionMode::kBSide: return "b-side";
    case DetectionMode::kCSide: return "c-side";
    case DetectionMode::kMajorization: return "majorization";
  }
  return "?";
}

DetectionMode parse_mode(std::string_view name) {
  for (DetectionMode m : {DetectionMode::kFull, DetectionMode::kASide, DetectionMode::kBSide,
                          DetectionMode::kCSide, DetectionMode::kMajorization}) {
    if (name == mode_name(m)) return m;
  }
  throw Error(ErrorKind::kParse, "unknown mode '" + std::string(name) + "'");
}

std::vector<MeasurementGroup> groups_for(DetectionMode mode) {
  using G = MeasurementGroup;
  const auto cfg = [](const char* l) { return G::second(SignConfig::parse(l)); };
  switch (mode) {
    case DetectionMode::kFull: return {G::stage_one(), cfg("-++"), cfg("-+-"), cfg("++-")};
    case DetectionMode::kASide: return {G::stage_one(), cfg("-++")};
    case DetectionMode::kBSide: return {G::stage_one(), cfg("-+-")};
    case DetectionMode::kCSide: return {G::stage_one(), cfg("++-")};
    case DetectionMode::kMajorization: return {G::stage_one(), cfg("+++")};
  }
  return {};
}

int parameter_count(DetectionMode mode, int d) {
  int n = 0;
  for (const auto& g : groups_for(mode)) n += std::max(0, d - g.first_k() + 1);
  return n;
}

std::vector<MatrixLabel> required_labels(DetectionMode mode) {
  using L = MatrixLabel;
  switch (mode) {
    case DetectionMode::kFull: return {L::kABC_TA, L::kABC_TB, L::kABC_TC, L::kAB_TA, L::kAC_TA, L::kBC_TB};
    case DetectionMode::kASide: return {L::kABC_TA, L::kAB_TA, L::kAC_TA};
    case DetectionMode::kBSide: return {L::kABC_TB, L::kAB_TA, L::kBC_TB};
    case DetectionMode::kCSide: return {L::kABC_TC, L::kAC_TA, L::kBC_TB};
    case DetectionMode::kMajorization:
      return {L::kABC, L::kAB, L::kAC, L::kBC, L::kA, L::kB, L::kC};
  }
  return {};
}

void MeasurementSet::set(const MeasurementGroup& group, int k, const GroupReadout& readout) {
  readouts_[{group.key(), k}] = readout;
}

bool MeasurementSet::has(const MeasurementGroup& group, int k) const {
  return readouts_.contains({group.key(), k});
}

const GroupReadout& MeasurementSet::get(const MeasurementGroup& group, int k) const {
  auto it = readouts_.find({group.key(), k});
  if (it == readouts_.end()) {
    throw Error(ErrorKind::kMissingData, "missing measurement: " + setting_name(group, k));
  }
  return it->second;
}

std::vector<std::tuple<MeasurementGroup, int, GroupReadout>> MeasurementSet::entries() const {
  std::vector<std::tuple<MeasurementGroup, int, GroupReadout>> out;
  for (const auto& [key, r] : readouts_) {
    const MeasurementGroup g = key.first == 0 ? MeasurementGroup::stage_one()
                                              : MeasurementGroup::second(SignConfig::from_index(key.first - 1));
    out.emplace_back(g, key.second, r);
  }
  return out;
}

AncillaDistribution analytic_distribution(const MomentPrimitives& p, const MeasurementGroup& group,
                                          const CalibrationRegistry& registry) {
  std::array<double, 8> probs{};
  if (group.is_stage_one()) {
    const MuVector mu = mu_vector(p);
    for (std::size_t i = 0; i < 8; ++i) probs[i] = mu.mu[i] / 8.0;
  } else {
    const NuVector nu = nu_vector(p, group.config(), registry);
    for (std::size_t i = 0; i < 8; ++i) probs[i] = nu.nu[i] / 8.0;
  }
  return AncillaDistribution(probs);
}

GroupReadout group_expectations(const TripartiteState& rho, int k, const MeasurementGroup& group,
                                const CalibrationRegistry& registry) {
  return readout_from(analytic_distribution(primitives(rho, k), group, registry));
}

MeasurementSet measure_analytic(const TripartiteState& rho, DetectionMode mode, int kmax,
                                const CalibrationRegistry& registry) {
  MeasurementSet out(rho.dims());
  if (kmax < 2) return out;
  const DirectMoments dm(rho, kmax);
  for (const auto& g : groups_for(mode)) {
    for (int k = g.first_k(); k <= kmax; ++k) {
      out.set(g, k, readout_from(analytic_distribution(primitives(dm, k), g, registry)));
    }
  }
  return out;
}

MeasurementSet measure_gate(const TripartiteState& rho, DetectionMode mode, int kmax,
                            const NetworkOptions& options) {
  MeasurementSet out(rho.dims());
  const auto groups = groups_for(mode);
  for (int k = 2; k <= kmax; ++k) {
    const AncillaState3 first = first_stage(rho, k, options);
    for (const auto& g : groups) {
      if (k < g.first_k()) continue;
      out.set(g, k, readout_from(g.is_stage_one() ? first.diagonal() : second_stage(first, g.config())));
    }
  }
  return out;
}

MeasurementSet measure_shots(const TripartiteState& rho, DetectionMode mode, int kmax,
                             std::uint64_t shots, std::uint64_t seed,
                             const CalibrationRegistry& registry) {
  if (shots < 1) throw Error(ErrorKind::kInvalidParams, "shots path needs at least one shot");
  MeasurementSet out(rho.dims());
  if (kmax < 2) return out;
  const DirectMoments dm(rho, kmax);
  for (const auto& g : groups_for(mode)) {
    for (int k = g.first_k(); k <= kmax; ++k) {
      const AncillaDistribution exact = analytic_distribution(primitives(dm, k), g, registry);
      const ShotCounts counts = sample_shots(exact, shots, setting_seed(seed, g, k));
      out.set(g, k, readout_from(empirical_distribution(counts), shots));
    }
  }
  return out;
}

std::uint64_t setting_seed(std::uint64_t seed, const MeasurementGroup& group, int k) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ static_cast<std::uint64_t>(group.key()));
  return splitmix64(s ^ static_cast<std::uint64_t>(k));
}

void PTMomentTable::set(MatrixLabel label, int k, MomentEntry entry) { entries_[{label, k}] = entry; }

bool PTMomentTable::has(MatrixLabel label, int k) const { return entries_.contains({label, k}); }

MomentEntry PTMomentTable::get(MatrixLabel label, int k) const {
  auto it = entries_.find({label, k});
  if (it == entries_.end()) {
    std::ostringstream os;
    os << "no recovered moment for " << label_name(label) << " at k=" << k;
    throw Error(ErrorKind::kMissingData, os.str());
  }
  return it->second;
}

std::vector<double> PTMomentTable::power_sums(MatrixLabel label, int n) const {
  std::vector<double> p{static_cast<double>(n)};
  for (int k = 1; k <= n; ++k) p.push_back(get(label, k).value);
  return p;
}

std::vector<double> PTMomentTable::sigmas(MatrixLabel label, int n) const {
  std::vector<double> s{0.0};
  for (int k = 1; k <= n; ++k) s.push_back(get(label, k).sigma);
  return s;
}

bool PTMomentTable::exact() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.sigma == 0.0; });
}

std::vector<std::tuple<MatrixLabel, int, MomentEntry>> PTMomentTable::entries() const {
  std::vector<std::tuple<MatrixLabel, int, MomentEntry>> out;
  for (const auto& [key, e] : entries_) out.emplace_back(key.first, key.second, e);
  return out;
}

PTMomentTable recover_pt_moments(const MeasurementSet& m, DetectionMode mode,
                                 const CalibrationRegistry& registry) {
  const auto one = MeasurementGroup::stage_one();
  std::vector<std::pair<MeasurementGroup, ConfigPattern>> second;
  for (const auto& g : groups_for(mode)) {
    if (!g.is_stage_one()) second.emplace_back(g, registry.require(g.config()));
  }

  PTMomentTable table;
  for (MatrixLabel label : required_labels(mode)) {
    const int n = label_dimension(label, m.dims());
    table.set(label, 1, {1.0, 0.0});
    for (int k = 2; k <= n; ++k) {
      const GroupReadout& r1 = m.get(one, k);
      const std::uint64_t n1 = r1.shots;

      if (auto party = single_label(label)) {
        const double v = r1.z[static_cast<std::size_t>(*party)];
        table.set(label, k, {v, readout_sigma(v, n1)});
        continue;
      }
      if (auto gi = gamma_index(label)) {
        if (k == 2) {
          // V_2 is hermitian: every gamma equals Tr rho^2 / 4.
          table.set(label, k, {r1.zzz, readout_sigma(r1.zzz, n1)});
          continue;
        }
        bool found = false;
        for (const auto& [g, pat] : second) {
          int minus = 0;
          for (int s : pat.gamma_signs) minus += (s < 0);
          if (minus != 1 || pat.gamma_signs[static_cast<std::size_t>(*gi)] != -1) continue;
          const GroupReadout& r2 = m.get(g, k);
          // sum(gamma) - Gamma = 2 gamma_i, and Tr = 4 gamma_i.
          const double v = 2.0 * r1.zzz - 2.0 * kSqrt2 * r2.zzz;
          const double s = 2.0 * quad(readout_sigma(r1.zzz, n1), kSqrt2 * readout_sigma(r2.zzz, r2.shots));
          table.set(label, k, {v, s});
          found = true;
          break;
        }
        if (!found) {
          throw Error(ErrorKind::kMissingData, "no measured configuration isolates " + label_name(label));
        }
        continue;
      }
      const PairLabel pl = *pair_label(label);
      const auto q = static_cast<std::size_t>(pl.pair);
      if (k == 2) {
        table.set(label, k, {r1.zz[q], readout_sigma(r1.zz[q], n1)});
        continue;
      }
      if (second.empty()) {
        throw Error(ErrorKind::kMissingData, "no second-stage group resolves " + label_name(label));
      }
      const auto& [g, pat] = second.front();
      const GroupReadout& r2 = m.get(g, k);
      const bool reports_transposed = pat.pair_beta[q] >= 3;
      const double s2 = readout_sigma(r2.zz[q], r2.shots);
      if (reports_transposed == pl.transposed) {
        table.set(label, k, {2.0 * r2.zz[q], 2.0 * s2});
      } else {
        table.set(label, k, {2.0 * (r1.zz[q] - r2.zz[q]), 2.0 * quad(readout_sigma(r1.zz[q], n1), s2)});
      }
    }
  }
  return table;
}

}  // namespace tripneg
