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

#include "tripneg/state_factory.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "tripneg/error.hpp"

namespace tripneg {

namespace {

ComplexMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Row-major draw order so the sequence does not depend on Eigen's layout.
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

void require_factor(const ComplexMatrix& m, char name) {
  if (!is_density_matrix(m)) {
    std::ostringstream os;
    os << "product_state: factor rho_" << name << " is not a density matrix";
    throw Error(ErrorKind::kInvalidState, os.str());
  }
}

}  // namespace

TripartiteState::TripartiteState(DimTriple dims, ComplexMatrix matrix)
    : dims_(dims), matrix_(std::move(matrix)) {
  if (matrix_.rows() != dims_.total() || matrix_.cols() != dims_.total()) {
    std::ostringstream os;
    os << "state matrix is " << matrix_.rows() << "x" << matrix_.cols()
       << " but dims " << dims_.a << "x" << dims_.b << "x" << dims_.c
       << " need side " << dims_.total();
    throw Error(ErrorKind::kInvalidDims, os.str());
  }
  const double herm = hermitian_deviation(matrix_);
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "state is not hermitian (max deviation " << herm << ")";
    throw Error(ErrorKind::kInvalidState, os.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    std::ostringstream os;
    os << "state trace is " << tr.real() << (tr.imag() < 0 ? "-" : "+")
       << std::abs(tr.imag()) << "i, expected 1";
    throw Error(ErrorKind::kInvalidState, os.str());
  }
  const double lmin = hermitian_spectrum(matrix_).min();
  if (lmin < kPsdTol) {
    std::ostringstream os;
    os << "state has negative eigenvalue " << lmin;
    throw Error(ErrorKind::kInvalidState, os.str());
  }
}

TripartiteState dct_state(const DctParams& p) {
  const double weights[] = {p.l0_plus, p.l0_minus, p.l01, p.l10, p.l11};
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error(ErrorKind::kInvalidParams, "DCT weights must be non-negative");
  }
  if (std::abs(p.total_weight() - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "DCT weights sum to " << p.total_weight()
       << " (l0+ + l0- + 2(l01 + l10 + l11) must equal 1)";
    throw Error(ErrorKind::kInvalidParams, os.str());
  }

  // |Psi_k^+-> = (|k1 k2 0> +- |~k1 ~k2 1>)/sqrt2 with k = k1 k2 in binary.
  auto psi = [](int k, double sign) {
    const int k1 = (k >> 1) & 1;
    const int k2 = k & 1;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v((k1 << 2) | (k2 << 1) | 0) += 1.0;
    v(((1 - k1) << 2) | ((1 - k2) << 1) | 1) += sign;
    // Exact halves instead of 1/sqrt2 amplitudes, so weights land unrounded.
    return ComplexMatrix(0.5 * v * v.adjoint());
  };

  ComplexMatrix rho = p.l0_plus * psi(0, +1.0) + p.l0_minus * psi(0, -1.0);
  const double lk[] = {p.l01, p.l10, p.l11};
  for (int k = 1; k <= 3; ++k) {
    rho += lk[k - 1] * (psi(k, +1.0) + psi(k, -1.0));
  }
  return TripartiteState(DimTriple(2, 2, 2), rho);
}

TripartiteState bound_state() {
  ComplexMatrix rho = ComplexMatrix::Zero(8, 8);
  const double s = 1.0 / 6.0;
  for (int i : {0, 1, 2, 5, 6, 7}) rho(i, i) = s;
  rho(0, 7) = s;
  rho(7, 0) = s;
  return TripartiteState(DimTriple(2, 2, 2), rho);
}

TripartiteState ghz_state() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  v(0) = 1.0;
  v(7) = 1.0;
  return TripartiteState(DimTriple(2, 2, 2), pure_projector(v));
}

TripartiteState w_state() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  v(4) = 1.0;  // |100>
  v(2) = 1.0;  // |010>
  v(1) = 1.0;  // |001>
  return TripartiteState(DimTriple(2, 2, 2), pure_projector(v));
}

TripartiteState maximally_mixed_state(const DimTriple& dims) {
  const int d = dims.total();
  return TripartiteState(dims, ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

TripartiteState random_state(const DimTriple& dims, int rank, std::uint64_t seed) {
  const int d = dims.total();
  if (rank < 1 || rank > d) {
    std::ostringstream os;
    os << "random_state: rank " << rank << " outside [1, " << d << "]";
    throw Error(ErrorKind::kInvalidParams, os.str());
  }
  std::mt19937_64 gen(seed);
  const ComplexMatrix g = gaussian_matrix(d, rank, gen);
  ComplexMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return TripartiteState(dims, rho);
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const ComplexMatrix g = gaussian_matrix(d, d, gen);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom so the distribution is Haar.
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

TripartiteState product_state(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b,
                              const ComplexMatrix& rho_c) {
  require_factor(rho_a, 'A');
  require_factor(rho_b, 'B');
  require_factor(rho_c, 'C');
  DimTriple dims(static_cast<int>(rho_a.rows()), static_cast<int>(rho_b.rows()),
                 static_cast<int>(rho_c.rows()));
  return TripartiteState(dims, kron(kron(rho_a, rho_b), rho_c));
}

ComplexMatrix pure_projector(const Eigen::VectorXcd& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::kInvalidParams, "zero state vector");
  const Eigen::VectorXcd v = amplitudes / norm;
  return v * v.adjoint();
}

}  // namespace tripneg
