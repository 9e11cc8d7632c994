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

#include "tripneg/locc_network.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "tripneg/error.hpp"

namespace tripneg {

namespace {

using Permutation = Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int>;

constexpr double kUnitaryTol = 1e-10;

std::size_t checked_power(std::size_t base, int exp, std::size_t cap, const char* what) {
  std::size_t n = 1;
  for (int i = 0; i < exp; ++i) {
    if (n > cap / base) {
      std::ostringstream os;
      os << what << ": dimension " << base << "^" << exp << " exceeds the size cap "
         << cap << "; use the analytic path";
      throw Error(ErrorKind::kSizeCap, os.str());
    }
    n *= base;
  }
  return n;
}

// Cyclic shift of the k copies of one subsystem inside a register laid out
// as copy_1 (x) copy_2 (x) ... (x) copy_k, each copy a product of `local`
// factors. indices[s] is the image of basis state s.
Permutation copy_shift(const std::vector<int>& local, std::size_t factor, int k) {
  std::size_t copy_dim = 1;
  for (int d : local) copy_dim *= static_cast<std::size_t>(d);
  std::size_t inner = 1;  // stride of `factor` inside one copy
  for (std::size_t i = factor + 1; i < local.size(); ++i) inner *= static_cast<std::size_t>(local[i]);
  const std::size_t dx = static_cast<std::size_t>(local[factor]);

  std::size_t total = 1;
  for (int c = 0; c < k; ++c) total *= copy_dim;

  std::vector<std::size_t> copy_stride(static_cast<std::size_t>(k));
  {
    std::size_t s = 1;
    for (int c = k; c-- > 0;) {
      copy_stride[static_cast<std::size_t>(c)] = s;
      s *= copy_dim;
    }
  }

  Permutation perm(static_cast<Eigen::Index>(total));
  std::vector<std::size_t> digits(static_cast<std::size_t>(k));
  for (std::size_t s = 0; s < total; ++s) {
    for (int c = 0; c < k; ++c) {
      const std::size_t local_index = (s / copy_stride[static_cast<std::size_t>(c)]) % copy_dim;
      digits[static_cast<std::size_t>(c)] = (local_index / inner) % dx;
    }
    std::size_t image = s;
    for (int c = 0; c < k; ++c) {
      // New slot c holds the old slot c-1 (slot 0 takes the old last slot).
      const std::size_t from = digits[static_cast<std::size_t>((c + k - 1) % k)];
      const std::size_t to_stride = copy_stride[static_cast<std::size_t>(c)] * inner;
      image = image - digits[static_cast<std::size_t>(c)] * to_stride + from * to_stride;
    }
    perm.indices()(static_cast<Eigen::Index>(s)) = static_cast<int>(image);
  }
  return perm;
}

// Density matrix on system (x) q ancilla qubits stored as 2^q x 2^q blocks of
// system-sized matrices. Ancilla bit q-1 is the most significant.
class BlockDensity {
 public:
  BlockDensity(const ComplexMatrix& system_state, int qubits)
      : qubits_(qubits), n_(std::size_t{1} << qubits), dim_(system_state.rows()) {
    blocks_.assign(n_ * n_, ComplexMatrix::Zero(dim_, dim_));
    block(0, 0) = system_state;
  }

  // rho -> G_j rho G_j^dagger for a single-qubit gate on ancilla bit j.
  void apply_qubit_gate(int bit, const ComplexMatrix& g) {
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t x0 = 0; x0 < n_; ++x0) {
      if (x0 & mask) continue;
      const std::size_t x1 = x0 | mask;
      for (std::size_t y = 0; y < n_; ++y) {
        ComplexMatrix top = g(0, 0) * block(x0, y) + g(0, 1) * block(x1, y);
        block(x1, y) = g(1, 0) * block(x0, y) + g(1, 1) * block(x1, y);
        block(x0, y) = std::move(top);
      }
    }
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y0 = 0; y0 < n_; ++y0) {
        if (y0 & mask) continue;
        const std::size_t y1 = y0 | mask;
        ComplexMatrix left =
            block(x, y0) * std::conj(g(0, 0)) + block(x, y1) * std::conj(g(0, 1));
        block(x, y1) = block(x, y0) * std::conj(g(1, 0)) + block(x, y1) * std::conj(g(1, 1));
        block(x, y0) = std::move(left);
      }
    }
  }

  // Controlled permutation: ancilla bit j set => P acts on the system.
  void apply_controlled_permutation(int bit, const Permutation& p) {
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        ComplexMatrix& b = block(x, y);
        if (x & mask) b = p * b;
        if (y & mask) b = b * p.transpose();
      }
    }
  }

  ComplexMatrix trace_out_system() const {
    ComplexMatrix out(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        out(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = block(x, y).trace();
      }
    }
    return out;
  }

 private:
  ComplexMatrix& block(std::size_t x, std::size_t y) { return blocks_[x * n_ + y]; }
  const ComplexMatrix& block(std::size_t x, std::size_t y) const { return blocks_[x * n_ + y]; }

  int qubits_;
  std::size_t n_;
  Eigen::Index dim_;
  std::vector<ComplexMatrix> blocks_;
};

// Dense 2^nbits unitary acting as the 4x4 `g` on qubits (first, second),
// qubit positions counted from the most significant bit (position 0).
ComplexMatrix embed_two_qubit(const ComplexMatrix& g, int first, int second, int nbits) {
  const std::size_t n = std::size_t{1} << nbits;
  const std::size_t mf = std::size_t{1} << (nbits - 1 - first);
  const std::size_t ms = std::size_t{1} << (nbits - 1 - second);
  ComplexMatrix u = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t col = 0; col < n; ++col) {
    const int in = ((col & mf) ? 2 : 0) | ((col & ms) ? 1 : 0);
    const std::size_t rest = col & ~(mf | ms);
    for (int out = 0; out < 4; ++out) {
      const std::size_t row = rest | ((out & 2) ? mf : 0) | ((out & 1) ? ms : 0);
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = g(out, in);
    }
  }
  return u;
}

ComplexMatrix embed_one_qubit(const ComplexMatrix& g, int pos, int nbits) {
  ComplexMatrix u = ComplexMatrix::Identity(1, 1);
  for (int q = 0; q < nbits; ++q) {
    u = kron(u, q == pos ? g : ComplexMatrix::Identity(2, 2));
  }
  return u;
}

int parity(std::size_t x) { return std::popcount(x) & 1; }

}  // namespace

Sign SignConfig::of(Party p) const {
  switch (p) {
    case Party::kA: return a;
    case Party::kB: return b;
    case Party::kC: return c;
  }
  return a;
}

std::string SignConfig::label() const {
  std::string s;
  for (Sign x : {a, b, c}) s += (x == Sign::kPlus ? '+' : '-');
  return s;
}

int SignConfig::index() const {
  return (a == Sign::kMinus ? 4 : 0) | (b == Sign::kMinus ? 2 : 0) | (c == Sign::kMinus ? 1 : 0);
}

SignConfig SignConfig::from_index(int index) {
  if (index < 0 || index > 7) throw Error(ErrorKind::kInvalidParams, "sign config index out of range");
  auto pick = [&](int bit) { return (index >> bit) & 1 ? Sign::kMinus : Sign::kPlus; };
  return SignConfig{pick(2), pick(1), pick(0)};
}

SignConfig SignConfig::parse(std::string_view label) {
  if (label.size() != 3) {
    throw Error(ErrorKind::kParse, "sign config must be three characters of '+'/'-'");
  }
  std::array<Sign, 3> s{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (label[i] == '+') {
      s[i] = Sign::kPlus;
    } else if (label[i] == '-') {
      s[i] = Sign::kMinus;
    } else {
      throw Error(ErrorKind::kParse, "sign config must be three characters of '+'/'-'");
    }
  }
  return SignConfig{s[0], s[1], s[2]};
}

std::array<SignConfig, 8> SignConfig::all() {
  std::array<SignConfig, 8> out;
  for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = from_index(i);
  return out;
}

const char* pair_name(AncillaPair p) {
  switch (p) {
    case AncillaPair::kAB: return "ab";
    case AncillaPair::kAC: return "ac";
    case AncillaPair::kBC: return "bc";
  }
  return "?";
}

AncillaDistribution::AncillaDistribution(const std::array<double, 8>& probs) : probs_(probs) {
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= -1e-12 && p <= 1.0 + 1e-12)) {
      std::ostringstream os;
      os << "ancilla probability " << p << " outside [0, 1]";
      throw Error(ErrorKind::kInvalidParams, os.str());
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    std::ostringstream os;
    os.precision(17);
    os << "ancilla probabilities sum to " << total;
    throw Error(ErrorKind::kInvalidParams, os.str());
  }
}

AncillaDistribution AncillaDistribution::point_mass(int outcome) {
  std::array<double, 8> p{};
  p.at(static_cast<std::size_t>(outcome)) = 1.0;
  return AncillaDistribution(p);
}

AncillaDistribution AncillaDistribution::uniform() {
  std::array<double, 8> p{};
  p.fill(0.125);
  return AncillaDistribution(p);
}

AncillaState3::AncillaState3(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != 8 || matrix_.cols() != 8) {
    throw Error(ErrorKind::kInvalidDims, "ancilla state must be 8x8");
  }
  if (!is_density_matrix(matrix_)) {
    throw Error(ErrorKind::kInvalidState, "ancilla state is not a density matrix");
  }
}

AncillaDistribution AncillaState3::diagonal() const {
  std::array<double, 8> p{};
  for (int i = 0; i < 8; ++i) p[static_cast<std::size_t>(i)] = matrix_(i, i).real();
  return AncillaDistribution(p);
}

ComplexMatrix shift_operator(int dloc, int k, std::size_t size_cap) {
  if (dloc < 1 || k < 1) throw Error(ErrorKind::kInvalidParams, "shift_operator needs dloc, k >= 1");
  const std::size_t n = checked_power(static_cast<std::size_t>(dloc), k, size_cap, "shift_operator");
  const Permutation p = copy_shift({dloc}, 0, k);
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t s = 0; s < n; ++s) {
    m(p.indices()(static_cast<Eigen::Index>(s)), static_cast<Eigen::Index>(s)) = 1.0;
  }
  return m;
}

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::numbers::sqrt2;
}

ComplexMatrix r_plus() {
  const Complex i(0.0, 1.0);
  ComplexMatrix r(2, 2);
  r << 1.0, -i, i, -1.0;
  return r / std::numbers::sqrt2;
}

ComplexMatrix r_minus() {
  const Complex i(0.0, 1.0);
  ComplexMatrix r(2, 2);
  r << 1.0, i, -i, -1.0;
  return r / std::numbers::sqrt2;
}

ComplexMatrix r_gate(Sign s) { return s == Sign::kPlus ? r_plus() : r_minus(); }

ComplexMatrix controlled_gate(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::kNotUnitary, "controlled_gate: u is not square");
  const Eigen::Index n = u.rows();
  const double dev = (u * u.adjoint() - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (dev > kUnitaryTol) {
    std::ostringstream os;
    os << "controlled_gate: u is not unitary (max |u u^dagger - I| = " << dev << ")";
    throw Error(ErrorKind::kNotUnitary, os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n).setIdentity();
  out.bottomRightCorner(n, n) = u;
  return out;
}

std::size_t first_stage_dimension(const DimTriple& dims, int k) {
  std::size_t n = 8;
  for (int i = 0; i < k; ++i) {
    if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(dims.total())) {
      return std::numeric_limits<std::size_t>::max();
    }
    n *= static_cast<std::size_t>(dims.total());
  }
  return n;
}

AncillaState3 first_stage(const TripartiteState& rho, int k, const NetworkOptions& options) {
  if (k < 1) throw Error(ErrorKind::kInvalidParams, "first_stage: k must be >= 1");
  const std::size_t total = first_stage_dimension(rho.dims(), k);
  if (total > options.size_cap) {
    std::ostringstream os;
    os << "gate-level first stage at k=" << k << " needs dimension " << total
       << " > size cap " << options.size_cap << "; use the analytic path";
    throw Error(ErrorKind::kSizeCap, os.str());
  }

  ComplexMatrix copies = rho.matrix();
  for (int i = 1; i < k; ++i) copies = kron(copies, rho.matrix());

  BlockDensity state(copies, 3);
  const ComplexMatrix h = hadamard();
  const std::vector<int> local = rho.dims().as_vector();

  for (int bit = 0; bit < 3; ++bit) state.apply_qubit_gate(bit, h);
  // Ancilla a1 is bit 2, b1 bit 1, c1 bit 0.
  for (Party p : {Party::kA, Party::kB, Party::kC}) {
    const int bit = 2 - static_cast<int>(p);
    state.apply_controlled_permutation(bit, copy_shift(local, static_cast<std::size_t>(p), k));
  }
  for (int bit = 0; bit < 3; ++bit) state.apply_qubit_gate(bit, h);

  ComplexMatrix anc = state.trace_out_system();
  anc = 0.5 * (anc + anc.adjoint());
  return AncillaState3(anc);
}

AncillaDistribution second_stage(const AncillaState3& first, SignConfig config) {
  // Qubit positions from the most significant: a1 b1 c1 a2 b2 c2.
  constexpr int kBits = 6;
  ComplexMatrix fresh = ComplexMatrix::Zero(8, 8);
  fresh(0, 0) = 1.0;
  const ComplexMatrix rho_in = kron(first.matrix(), fresh);

  const ComplexMatrix h = hadamard();
  ComplexMatrix u_h = ComplexMatrix::Identity(64, 64);
  for (int q = 3; q < 6; ++q) u_h = embed_one_qubit(h, q, kBits) * u_h;

  ComplexMatrix u_cr = ComplexMatrix::Identity(64, 64);
  for (Party p : {Party::kA, Party::kB, Party::kC}) {
    const int target = static_cast<int>(p);
    const int control = target + 3;
    u_cr = embed_two_qubit(controlled_gate(r_gate(config.of(p))), control, target, kBits) * u_cr;
  }

  const ComplexMatrix u = u_h * u_cr * u_h;
  const ComplexMatrix out = u * rho_in * u.adjoint();

  std::array<double, 8> probs{};
  for (std::size_t g = 0; g < 64; ++g) {
    probs[g & 7] += out(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(g)).real();
  }
  return AncillaDistribution(probs);
}

double measure_zzz(const AncillaDistribution& dist) {
  double s = 0.0;
  for (std::size_t o = 0; o < 8; ++o) s += (parity(o) ? -1.0 : 1.0) * dist[o];
  return s;
}

double measure_zz(const AncillaDistribution& dist, AncillaPair pair) {
  std::size_t mask = 0;
  switch (pair) {
    case AncillaPair::kAB: mask = 0b110; break;
    case AncillaPair::kAC: mask = 0b101; break;
    case AncillaPair::kBC: mask = 0b011; break;
  }
  double s = 0.0;
  for (std::size_t o = 0; o < 8; ++o) s += (parity(o & mask) ? -1.0 : 1.0) * dist[o];
  return s;
}

double measure_z(const AncillaDistribution& dist, Party single) {
  const std::size_t mask = std::size_t{4} >> static_cast<int>(single);
  double s = 0.0;
  for (std::size_t o = 0; o < 8; ++o) s += ((o & mask) ? -1.0 : 1.0) * dist[o];
  return s;
}

ShotCounts sample_shots(const AncillaDistribution& dist, std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::kInvalidParams, "sample_shots: n must be >= 1");
  std::array<double, 8> cdf{};
  double acc = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    acc += std::max(0.0, dist[i]);
    cdf[i] = acc;
  }
  for (double& c : cdf) c /= acc;
  // Outcomes with zero mass never win the search below.
  std::size_t last = 7;
  while (last > 0 && dist[last] <= 0.0) --last;
  cdf[last] = 1.0;

  std::mt19937_64 gen(seed);
  ShotCounts out;
  out.total = n;
  for (std::uint64_t s = 0; s < n; ++s) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    std::size_t i = 0;
    while (i < last && u >= cdf[i]) ++i;
    ++out.counts[i];
  }
  return out;
}

AncillaDistribution empirical_distribution(const ShotCounts& counts) {
  if (counts.total == 0) throw Error(ErrorKind::kInvalidParams, "empirical_distribution: no shots");
  std::array<double, 8> p{};
  for (std::size_t i = 0; i < 8; ++i) {
    p[i] = static_cast<double>(counts.counts[i]) / static_cast<double>(counts.total);
  }
  return AncillaDistribution(p);
}

}  // namespace tripneg
