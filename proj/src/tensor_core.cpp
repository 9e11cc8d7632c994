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

#include "tripneg/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "tripneg/error.hpp"

namespace tripneg {

namespace {

std::size_t product(std::span<const int> dims) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

void require_square_of(const ComplexMatrix& m, std::size_t side,
                       const char* what) {
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != side) {
    std::ostringstream os;
    os << what << ": matrix is " << m.rows() << "x" << m.cols()
       << " but the subsystem dimensions multiply to " << side;
    throw Error(ErrorKind::kInvalidDims, os.str());
  }
}

// strides[i] = product of dims after i (row-major, first subsystem slowest).
std::vector<std::size_t> strides_of(std::span<const int> dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) {
    s[i - 1] = s[i] * static_cast<std::size_t>(dims[i]);
  }
  return s;
}

}  // namespace

char party_name(Party p) { return "ABC"[static_cast<int>(p)]; }

DimTriple::DimTriple(int da, int db, int dc) : a(da), b(db), c(dc) {
  if (da < 1 || db < 1 || dc < 1) {
    throw Error(ErrorKind::kInvalidDims, "local dimensions must be positive");
  }
}

int DimTriple::local(Party p) const {
  switch (p) {
    case Party::kA: return a;
    case Party::kB: return b;
    case Party::kC: return c;
  }
  return 0;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double Spectrum::power_sum(int k) const {
  double s = 0.0;
  for (double v : values_) s += std::pow(v, k);
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rb = b.rows();
  const Eigen::Index cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

double hermitian_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const ComplexMatrix& m, double tol) {
  const double dev = hermitian_deviation(m);
  if (!(dev <= tol)) {
    std::ostringstream os;
    os << "matrix is not hermitian: max |m - m^dagger| = " << dev;
    throw Error(ErrorKind::kNotHermitian, os.str());
  }
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const int> dims,
                                std::size_t sub) {
  if (sub >= dims.size()) {
    throw Error(ErrorKind::kInvalidDims, "partial_transpose: subsystem out of range");
  }
  const std::size_t n = product(dims);
  require_square_of(m, n, "partial_transpose");
  const std::size_t stride = strides_of(dims)[sub];
  const std::size_t d = static_cast<std::size_t>(dims[sub]);

  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t rd = (r / stride) % d;
    const std::size_t rbase = r - rd * stride;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t cd = (c / stride) % d;
      const std::size_t cbase = c - cd * stride;
      out(rbase + cd * stride, cbase + rd * stride) = m(r, c);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const DimTriple& dims,
                                Party sub) {
  const auto v = dims.as_vector();
  return partial_transpose(m, v, static_cast<std::size_t>(sub));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            const std::vector<bool>& keep) {
  if (keep.size() != dims.size()) {
    throw Error(ErrorKind::kInvalidDims, "partial_trace: keep mask length mismatch");
  }
  const std::size_t n = product(dims);
  require_square_of(m, n, "partial_trace");

  std::vector<int> kept_dims;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (keep[i]) kept_dims.push_back(dims[i]);
  }
  const std::size_t nk = product(kept_dims);
  const auto in_strides = strides_of(dims);
  const auto out_strides = strides_of(kept_dims);

  // Split every global index into (kept index, traced-out signature).
  std::vector<std::size_t> kept_index(n);
  std::vector<std::size_t> traced_index(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t ki = 0;
    std::size_t ti = 0;
    std::size_t kslot = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      const std::size_t digit = (g / in_strides[s]) % static_cast<std::size_t>(dims[s]);
      if (keep[s]) {
        ki += digit * out_strides[kslot++];
      } else {
        ti = ti * static_cast<std::size_t>(dims[s]) + digit;
      }
    }
    kept_index[g] = ki;
    traced_index[g] = ti;
  }

  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(nk),
                                          static_cast<Eigen::Index>(nk));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (traced_index[r] == traced_index[c]) {
        out(kept_index[r], kept_index[c]) += m(r, c);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const DimTriple& dims,
                            std::initializer_list<Party> keep) {
  std::vector<bool> mask(3, false);
  for (Party p : keep) mask[static_cast<std::size_t>(p)] = true;
  const auto v = dims.as_vector();
  return partial_trace(m, v, mask);
}

Spectrum hermitian_spectrum(const ComplexMatrix& m) {
  require_hermitian(m);
  // Symmetrize so the solver sees an exactly hermitian input.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kInternal, "hermitian eigensolver did not converge");
  }
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    const double res = (h * vecs.col(i) - vals(i) * vecs.col(i)).norm();
    if (res > 1e-8) {
      std::ostringstream os;
      os << "eigenpair residual " << res << " exceeds 1e-8";
      throw Error(ErrorKind::kInternal, os.str());
    }
  }
  return Spectrum(std::vector<double>(vals.data(), vals.data() + vals.size()));
}

std::vector<double> trace_powers(const ComplexMatrix& m, int kmax) {
  require_hermitian(m);
  if (kmax < 0) throw Error(ErrorKind::kInvalidParams, "trace_powers: negative order");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  out.push_back(static_cast<double>(m.rows()));
  ComplexMatrix power = m;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) power = power * m;
    const Complex t = power.trace();
    if (std::abs(t.imag()) > 1e-12 * std::max(1.0, std::abs(t.real()))) {
      std::ostringstream os;
      os << "Tr(m^" << k << ") has imaginary residue " << t.imag();
      throw Error(ErrorKind::kNotHermitian, os.str());
    }
    out.push_back(t.real());
  }
  return out;
}

double trace_power(const ComplexMatrix& m, int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidParams, "trace_power: k must be >= 1");
  return trace_powers(m, k).back();
}

double trace_norm(const ComplexMatrix& m) {
  const Spectrum s = hermitian_spectrum(m);
  double total = 0.0;
  for (double v : s.values()) total += std::abs(v);
  return total;
}

bool is_density_matrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (hermitian_deviation(m) > kHermitianTol) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > kTraceTol) return false;
  return hermitian_spectrum(m).min() >= kPsdTol;
}

}  // namespace tripneg
