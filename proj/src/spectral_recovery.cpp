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

#include "tripneg/spectral_recovery.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "tripneg/error.hpp"

namespace tripneg {

namespace {

using CD = std::complex<double>;

// Union-find over root indices.
struct Clusters {
  std::vector<int> parent;
  explicit Clusters(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

double power_residual(const std::vector<CD>& roots, const std::vector<double>& p) {
  double worst = 0.0;
  for (std::size_t k = 1; k <= p.size(); ++k) {
    std::complex<long double> s = 0;
    for (const CD& z : roots) s += std::pow(std::complex<long double>(z), static_cast<int>(k));
    worst = std::max(worst, static_cast<double>(std::abs(s - static_cast<long double>(p[k - 1]))));
  }
  return worst;
}

// A root of multiplicity m comes back from the companion matrix split by
// ~eps^(1/m): as a complex ring, or as a close real pair when m = 2. Roots
// linked by either pattern are merged into their real centroid, kept only
// when the moment round trip does not get worse.
int collapse_clusters(std::vector<CD>& roots, const std::vector<double>& p) {
  const int n = static_cast<int>(roots.size());
  double scale = 1.0;
  for (const CD& z : roots) scale = std::max(scale, std::abs(z));
  const double im_floor = 1e-12 * scale;
  const double real_link = 1e-6 * scale;

  Clusters uf(n);
  for (int i = 0; i < n; ++i) {
    const CD zi = roots[static_cast<std::size_t>(i)];
    const double im = std::abs(zi.imag());
    for (int j = i + 1; j < n; ++j) {
      const CD zj = roots[static_cast<std::size_t>(j)];
      const bool ring = im > im_floor && std::abs(zj - zi.real()) <= 2.5 * im;
      const bool ring_j = std::abs(zj.imag()) > im_floor &&
                          std::abs(zi - zj.real()) <= 2.5 * std::abs(zj.imag());
      if (ring || ring_j || std::abs(zi - zj) <= real_link) uf.unite(i, j);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

  int collapsed = 0;
  double residual = power_residual(roots, p);
  for (const auto& [root, members] : groups) {
    (void)root;
    if (members.size() < 2) continue;
    CD sum = 0;
    for (int i : members) sum += roots[static_cast<std::size_t>(i)];
    const double c = sum.real() / static_cast<double>(members.size());

    std::vector<CD> trial = roots;
    for (int i : members) trial[static_cast<std::size_t>(i)] = c;
    const double after = power_residual(trial, p);
    if (after > std::max(1e-9, 2.0 * residual)) continue;
    roots = std::move(trial);
    residual = after;
    collapsed += static_cast<int>(members.size());
  }
  return collapsed;
}

double clamp_negativity(double raw) { return (raw < 0.0 && raw >= -kNegativityClampTol) ? 0.0 : raw; }

std::uint64_t shots_of(const MeasurementSet& m) {
  std::uint64_t shots = 0;
  for (const auto& [g, k, r] : m.entries()) shots = std::max(shots, r.shots);
  return shots;
}

MeasurementSet measure(const TripartiteState& rho, DetectionMode mode, const LoccOptions& options,
                       const CalibrationRegistry& registry) {
  const int d = rho.dims().total();
  switch (options.path) {
    case PipelinePath::kAnalytic: return measure_analytic(rho, mode, d, registry);
    case PipelinePath::kGate: return measure_gate(rho, mode, d, options.network);
    case PipelinePath::kShots:
      if (options.shots < 1) throw Error(ErrorKind::kInvalidParams, "shots path needs --shots >= 1");
      return measure_shots(rho, mode, d, options.shots, options.seed, registry);
  }
  throw Error(ErrorKind::kInternal, "unknown pipeline path");
}

// Above the conditioning dimension complex residue is reported, not fatal.
NewtonOptions conditioning_options(NewtonOptions base, int d) {
  if (d > kConditioningDim) base.imag_tol = std::numeric_limits<double>::infinity();
  return base;
}

// Spectra of density matrices are non-negative, so any negative root is an
// inversion artifact (a split repeated zero, typically). Clip and rescale.
Spectrum project_psd(const Spectrum& s, double& clipped) {
  std::vector<double> v = s.values();
  clipped = 0.0;
  for (double& x : v) {
    if (x < 0.0) {
      clipped = std::max(clipped, -x);
      x = 0.0;
    }
  }
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  if (total > 0.0) {
    for (double& x : v) x /= total;
  }
  return Spectrum(std::move(v));
}

constexpr std::array<MatrixLabel, 7> kMajorizationLabels = {
    MatrixLabel::kABC, MatrixLabel::kAB, MatrixLabel::kAC, MatrixLabel::kBC,
    MatrixLabel::kA,   MatrixLabel::kB,  MatrixLabel::kC};

}  // namespace

std::vector<long double> elementary_symmetric(const std::vector<double>& p, int n) {
  if (n < 1 || static_cast<int>(p.size()) < n) {
    throw Error(ErrorKind::kInvalidParams, "elementary_symmetric: need p_1..p_n");
  }
  std::vector<long double> e(static_cast<std::size_t>(n) + 1, 0.0L);
  e[0] = 1.0L;
  for (int k = 1; k <= n; ++k) {
    long double acc = 0.0L;
    for (int i = 1; i <= k; ++i) {
      const long double term = e[static_cast<std::size_t>(k - i)] * static_cast<long double>(p[static_cast<std::size_t>(i - 1)]);
      acc += (i % 2 == 1) ? term : -term;
    }
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  return e;
}

SpectrumResult newton_spectrum(const std::vector<double>& power_sums, int n,
                               const NewtonOptions& options) {
  if (n < 1 || static_cast<int>(power_sums.size()) != n) {
    std::ostringstream os;
    os << "newton_spectrum: expected " << n << " power sums, got " << power_sums.size();
    throw Error(ErrorKind::kInvalidParams, os.str());
  }
  const std::vector<long double> e = elementary_symmetric(power_sums, n);

  // Companion matrix of x^n - e1 x^(n-1) + e2 x^(n-2) - ...
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const long double c = ((j + 1) % 2 == 1) ? e[static_cast<std::size_t>(j + 1)] : -e[static_cast<std::size_t>(j + 1)];
    companion(0, j) = static_cast<double>(c);
  }
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kIllConditioned, "companion eigensolver did not converge");
  }
  std::vector<CD> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);

  SpectrumResult out;
  if (options.collapse_clusters) out.collapsed = collapse_clusters(roots, power_sums);

  std::vector<double> real(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const CD z = roots[static_cast<std::size_t>(i)];
    out.max_imag = std::max(out.max_imag, std::abs(z.imag()));
    real[static_cast<std::size_t>(i)] = z.real();
  }
  if (out.max_imag > options.imag_tol) {
    std::ostringstream os;
    os << "spectrum has complex residue " << out.max_imag << " > " << options.imag_tol;
    throw Error(ErrorKind::kIllConditioned, os.str());
  }

  out.spectrum = Spectrum(std::move(real));
  for (int k = 1; k <= n; ++k) {
    long double s = 0.0L;
    for (double v : out.spectrum.values()) s += std::pow(static_cast<long double>(v), k);
    out.residual = std::max(out.residual, static_cast<double>(std::abs(s - power_sums[static_cast<std::size_t>(k - 1)])));
  }
  out.warning = out.residual > options.residual_tol || out.max_imag > 1e-6;
  return out;
}

double AtomicSpectrum::negativity() const {
  double s = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) s += weights[i] * std::abs(atoms[i]);
  return (s - 1.0) / 2.0;
}

double AtomicSpectrum::min_atom() const {
  return atoms.empty() ? 0.0 : *std::min_element(atoms.begin(), atoms.end());
}

AtomicSpectrum pencil_spectrum(const std::vector<double>& p, const std::vector<double>& sigma) {
  if (p.size() < 2 || sigma.size() != p.size()) {
    throw Error(ErrorKind::kInvalidParams, "pencil_spectrum: need p_0..p_K with matching sigmas");
  }
  const int kmax = static_cast<int>(p.size()) - 1;
  const int m = std::max(1, std::min(kmax / 2 + 1, (kmax + 1) / 2));

  Eigen::MatrixXd hankel(m, m);
  double noise = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      hankel(i, j) = p[static_cast<std::size_t>(i + j)];
      noise += sigma[static_cast<std::size_t>(i + j)] * sigma[static_cast<std::size_t>(i + j)];
    }
  }
  AtomicSpectrum out;
  out.threshold = 3.0 * std::sqrt(noise) + 1e-10 * std::abs(p[0]);
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(hankel).singularValues();
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) r += sv(i) > out.threshold;
  r = std::clamp(r, 1, std::max(1, (kmax + 1) / 2));
  out.rank = r;

  Eigen::MatrixXd h0(r, r), h1(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      h0(i, j) = p[static_cast<std::size_t>(i + j)];
      h1(i, j) = p[static_cast<std::size_t>(i + j + 1)];
    }
  }
  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges(h1, h0, false);
  out.atoms.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    const CD a = ges.alphas()(i);
    const double b = ges.betas()(i);
    if (b == 0.0) throw Error(ErrorKind::kIllConditioned, "pencil has an infinite eigenvalue");
    out.atoms[static_cast<std::size_t>(i)] = (a / b).real();
  }

  // Weighted Vandermonde fit of the multiplicities.
  Eigen::MatrixXd v(kmax + 1, r);
  Eigen::VectorXd rhs(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    const double w = 1.0 / std::max(sigma[static_cast<std::size_t>(k)], 1e-9);
    for (int i = 0; i < r; ++i) v(k, i) = w * std::pow(out.atoms[static_cast<std::size_t>(i)], k);
    rhs(k) = w * p[static_cast<std::size_t>(k)];
  }
  const Eigen::VectorXd wts = v.colPivHouseholderQr().solve(rhs);
  out.weights.assign(wts.data(), wts.data() + wts.size());
  return out;
}

double negativity_raw(const Spectrum& spectrum) {
  if (std::abs(spectrum.sum() - 1.0) > 1e-6) {
    std::ostringstream os;
    os << "spectrum trace " << spectrum.sum() << " is not 1";
    throw Error(ErrorKind::kInvalidSpectrum, os.str());
  }
  double s = 0.0;
  for (double v : spectrum.values()) s += std::abs(v);
  return (s - 1.0) / 2.0;
}

double negativity(const Spectrum& spectrum) { return clamp_negativity(negativity_raw(spectrum)); }

const char* split_name(Split s) {
  switch (s) {
    case Split::kA_BC: return "A-BC";
    case Split::kB_AC: return "B-AC";
    case Split::kC_AB: return "C-AB";
    case Split::kA_B: return "A-B";
    case Split::kA_C: return "A-C";
    case Split::kB_C: return "B-C";
  }
  return "?";
}

MatrixLabel split_label(Split s) {
  switch (s) {
    case Split::kA_BC: return MatrixLabel::kABC_TA;
    case Split::kB_AC: return MatrixLabel::kABC_TB;
    case Split::kC_AB: return MatrixLabel::kABC_TC;
    case Split::kA_B: return MatrixLabel::kAB_TA;
    case Split::kA_C: return MatrixLabel::kAC_TA;
    case Split::kB_C: return MatrixLabel::kBC_TB;
  }
  throw Error(ErrorKind::kInternal, "unknown split");
}

const char* verdict_name(Verdict v) { return v == Verdict::kEntangled ? "entangled" : "PPT"; }

const char* provenance_name(Provenance p) {
  return p == Provenance::kLoccPipeline ? "locc-pipeline" : "direct-oracle";
}

const char* flag_name(TripartiteFlag f) {
  switch (f) {
    case TripartiteFlag::kDetected: return "detected";
    case TripartiteFlag::kNotInferable: return "not-inferable";
    case TripartiteFlag::kNotApplicable: return "not-applicable";
  }
  return "?";
}

bool NegativityReport::has(Split s) const {
  return std::any_of(splits.begin(), splits.end(), [s](const SplitResult& r) { return r.split == s; });
}

const SplitResult& NegativityReport::at(Split s) const {
  for (const auto& r : splits) {
    if (r.split == s) return r;
  }
  throw Error(ErrorKind::kMissingData, std::string("split ") + split_name(s) + " not in report");
}

std::vector<Split> splits_for(DetectionMode mode) {
  switch (mode) {
    case DetectionMode::kFull: return {kAllSplits.begin(), kAllSplits.end()};
    case DetectionMode::kASide: return {Split::kA_BC, Split::kA_B, Split::kA_C};
    case DetectionMode::kBSide: return {Split::kB_AC, Split::kA_B, Split::kB_C};
    case DetectionMode::kCSide: return {Split::kC_AB, Split::kA_C, Split::kB_C};
    case DetectionMode::kMajorization: return {};
  }
  return {};
}

double detection_threshold(std::uint64_t shots) {
  if (shots == 0) return kDetectionThreshold;
  return 10.0 / std::sqrt(static_cast<double>(shots));
}

NegativityReport negativity_set_direct(const TripartiteState& rho) {
  NegativityReport report;
  report.provenance = Provenance::kDirectOracle;
  report.dims = rho.dims();
  for (Split s : kAllSplits) {
    SplitResult r;
    r.split = s;
    r.spectrum = hermitian_spectrum(label_matrix(rho, split_label(s)));
    r.raw = negativity_raw(r.spectrum);
    r.value = clamp_negativity(r.raw);
    r.verdict = r.value > report.threshold ? Verdict::kEntangled : Verdict::kPPT;
    report.splits.push_back(std::move(r));
  }
  report.tripartite = genuine_tripartite_flag(report, report.dims);
  return report;
}

const char* path_name(PipelinePath p) {
  switch (p) {
    case PipelinePath::kAnalytic: return "analytic";
    case PipelinePath::kGate: return "gate";
    case PipelinePath::kShots: return "shots";
  }
  return "?";
}

PipelinePath parse_path(std::string_view name) {
  for (PipelinePath p : {PipelinePath::kAnalytic, PipelinePath::kGate, PipelinePath::kShots}) {
    if (name == path_name(p)) return p;
  }
  throw Error(ErrorKind::kParse, "unknown path '" + std::string(name) + "'");
}

NegativityReport negativity_set_from_measurements(const MeasurementSet& m, DetectionMode mode,
                                                  const NewtonOptions& newton,
                                                  const CalibrationRegistry& registry) {
  if (mode == DetectionMode::kMajorization) {
    throw Error(ErrorKind::kInvalidParams, "majorization mode reports no negativities");
  }
  NegativityReport report;
  report.provenance = Provenance::kLoccPipeline;
  report.dims = m.dims();
  report.mode = mode;
  report.shots = shots_of(m);
  report.threshold = detection_threshold(report.shots);
  report.parameter_count = static_cast<int>(m.size());
  report.moments = recover_pt_moments(m, mode, registry);
  const int d = m.dims().total();
  const NewtonOptions opts = conditioning_options(newton, d);

  for (Split s : splits_for(mode)) {
    const MatrixLabel label = split_label(s);
    const int n = label_dimension(label, m.dims());
    const std::vector<double> p = report.moments->power_sums(label, n);
    SplitResult r;
    r.split = s;
    if (report.shots == 0) {
      const SpectrumResult sr = newton_spectrum({p.begin() + 1, p.end()}, n, opts);
      r.spectrum = sr.spectrum;
      r.residual = sr.residual;
      r.warning = sr.warning;
      r.raw = negativity_raw(r.spectrum);
      if (sr.warning) {
        std::ostringstream os;
        os << split_name(s) << ": moment round-trip residual " << sr.residual;
        report.warnings.push_back(os.str());
      }
      if (d > kConditioningDim) {
        std::ostringstream os;
        os << split_name(s) << ": conditioning d=" << d << " residual=" << sr.residual
           << " complex residue=" << sr.max_imag;
        report.warnings.push_back(os.str());
      }
    } else {
      const AtomicSpectrum as = pencil_spectrum(p, report.moments->sigmas(label, n));
      r.spectrum = Spectrum(as.atoms);
      // Keep the weights aligned with the sorted atoms.
      std::vector<std::size_t> order(as.atoms.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return as.atoms[a] > as.atoms[b]; });
      for (std::size_t i : order) r.weights.push_back(as.weights[i]);
      r.raw = as.negativity();
    }
    r.value = clamp_negativity(r.raw);
    r.verdict = r.value > report.threshold ? Verdict::kEntangled : Verdict::kPPT;
    report.splits.push_back(std::move(r));
  }
  report.tripartite = genuine_tripartite_flag(report, report.dims);
  return report;
}

NegativityReport negativity_set_via_locc(const TripartiteState& rho, int d_max, DetectionMode mode,
                                         const LoccOptions& options,
                                         const CalibrationRegistry& registry) {
  if (d_max != rho.dims().total()) {
    std::ostringstream os;
    os << "d_max=" << d_max << " differs from the state dimension " << rho.dims().total()
       << "; incomplete moments cannot determine spectra";
    throw Error(ErrorKind::kInvalidParams, os.str());
  }
  if (mode == DetectionMode::kMajorization) {
    throw Error(ErrorKind::kInvalidParams, "majorization mode reports no negativities");
  }
  return negativity_set_from_measurements(measure(rho, mode, options, registry), mode,
                                          options.newton, registry);
}

bool majorization_prec(const Spectrum& x, const Spectrum& y) {
  const std::size_t n = std::max(x.size(), y.size());
  std::vector<double> a = x.values();
  std::vector<double> b = y.values();
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  const double ta = std::accumulate(a.begin(), a.end(), 0.0);
  const double tb = std::accumulate(b.begin(), b.end(), 0.0);
  if (std::abs(ta - tb) > 1e-9) {
    std::ostringstream os;
    os << "majorization totals differ: " << ta << " vs " << tb;
    throw Error(ErrorKind::kInvalidComparison, os.str());
  }
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb + 1e-9) return false;
  }
  return true;
}

bool MajorizationReport::detected() const {
  return std::any_of(relations.begin(), relations.end(), [](const auto& r) { return !r.holds; });
}

std::vector<std::pair<MatrixLabel, MatrixLabel>> majorization_relations() {
  using L = MatrixLabel;
  return {{L::kABC, L::kA},  {L::kABC, L::kB},  {L::kABC, L::kC}, {L::kABC, L::kAB},
          {L::kABC, L::kAC}, {L::kABC, L::kBC}, {L::kAB, L::kA},  {L::kAB, L::kB},
          {L::kAC, L::kA},   {L::kAC, L::kC},   {L::kBC, L::kB},  {L::kBC, L::kC}};
}

MajorizationReport majorization_from_spectra(std::map<MatrixLabel, Spectrum> spectra,
                                             Provenance provenance) {
  MajorizationReport report;
  report.provenance = provenance;
  for (const auto& [lhs, rhs] : majorization_relations()) {
    auto x = spectra.find(lhs);
    auto y = spectra.find(rhs);
    if (x == spectra.end() || y == spectra.end()) {
      throw Error(ErrorKind::kMissingData, "majorization needs spectra of " + label_name(lhs) +
                                               " and " + label_name(rhs));
    }
    report.relations.push_back({lhs, rhs, majorization_prec(x->second, y->second)});
  }
  report.spectra = std::move(spectra);
  return report;
}

MajorizationReport majorization_report(const TripartiteState& rho, MajorizationSource source,
                                       const LoccOptions& options,
                                       const CalibrationRegistry& registry) {
  std::map<MatrixLabel, Spectrum> spectra;
  if (source == MajorizationSource::kOracle) {
    for (MatrixLabel l : kMajorizationLabels) spectra[l] = hermitian_spectrum(label_matrix(rho, l));
    return majorization_from_spectra(std::move(spectra), Provenance::kDirectOracle);
  }

  const auto groups = groups_for(DetectionMode::kMajorization);
  for (const auto& g : groups) {
    if (!g.is_stage_one()) registry.require(g.config());
  }
  const MeasurementSet m = measure(rho, DetectionMode::kMajorization, options, registry);
  const PTMomentTable table = recover_pt_moments(m, DetectionMode::kMajorization, registry);
  std::vector<std::string> warnings;
  const NewtonOptions opts = conditioning_options(options.newton, rho.dims().total());
  for (MatrixLabel l : kMajorizationLabels) {
    const int n = label_dimension(l, rho.dims());
    const std::vector<double> p = table.power_sums(l, n);
    const SpectrumResult sr = newton_spectrum({p.begin() + 1, p.end()}, n, opts);
    if (sr.warning) {
      std::ostringstream os;
      os << label_name(l) << ": moment round-trip residual " << sr.residual;
      warnings.push_back(os.str());
    }
    double clipped = 0.0;
    spectra[l] = project_psd(sr.spectrum, clipped);
    if (clipped > 1e-9) {
      std::ostringstream os;
      os << label_name(l) << ": negative root " << -clipped << " clipped to zero";
      warnings.push_back(os.str());
    }
  }
  MajorizationReport report = majorization_from_spectra(std::move(spectra), Provenance::kLoccPipeline);
  report.parameter_count = static_cast<int>(m.size());
  report.warnings = std::move(warnings);
  return report;
}

TripartiteFlag genuine_tripartite_flag(const NegativityReport& report, const DimTriple& dims) {
  if (!dims.all_qubits()) return TripartiteFlag::kNotApplicable;
  const double t = report.threshold;
  const auto zero = [&](Split s) { return report.has(s) && report.at(s).value <= t; };
  const auto positive = [&](Split s) { return report.has(s) && report.at(s).value > t; };
  const bool hit = (zero(Split::kA_B) && zero(Split::kA_C) && positive(Split::kA_BC)) ||
                   (zero(Split::kA_B) && zero(Split::kB_C) && positive(Split::kB_AC)) ||
                   (zero(Split::kA_C) && zero(Split::kB_C) && positive(Split::kC_AB));
  return hit ? TripartiteFlag::kDetected : TripartiteFlag::kNotInferable;
}

}  // namespace tripneg
