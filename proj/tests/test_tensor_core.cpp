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

#include <random>

#include "oracles.hpp"
#include "pool.hpp"
#include "tripneg/error.hpp"
#include "tripneg/tensor_core.hpp"

using namespace tripneg;

namespace {

ComplexMatrix random_hermitian(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return (m + m.adjoint()) / 2.0;
}

ComplexMatrix diag(std::initializer_list<double> v) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (double x : v) d(i++) = x;
  return d.cast<Complex>().asDiagonal();
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("kron basics") {
  CHECK(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)).isApprox(ComplexMatrix::Identity(4, 4)));
  const ComplexMatrix k = kron(ComplexMatrix::Random(2, 2), ComplexMatrix::Random(3, 3));
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
  CHECK(max_abs(kron(diag({1, 0}), diag({1, 1})) - diag({1, 1, 0, 0})) == 0.0);
}

TEST_CASE("kron trace is multiplicative") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ComplexMatrix a = random_hermitian(3, s);
    const ComplexMatrix b = random_hermitian(4, s + 100);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
  }
}

TEST_CASE("DimTriple rejects non-positive dimensions") {
  CHECK_THROWS_AS(DimTriple(0, 2, 2), Error);
  CHECK(DimTriple(2, 3, 4).total() == 24);
}

TEST_CASE("partial transpose against brute-force index oracle") {
  for (const auto& [name, st] : pool::qubit_pool(6)) {
    for (Party p : {Party::kA, Party::kB, Party::kC}) {
      const ComplexMatrix expect = oracle::partial_transpose(st.matrix(), {2, 2, 2}, static_cast<int>(p));
      CHECK_MESSAGE(max_abs(partial_transpose(st.matrix(), st.dims(), p) - expect) == 0.0, name);
    }
  }
  // Uneven dimensions.
  const ComplexMatrix m = random_hermitian(12, 3);
  const std::vector<int> dims{2, 3, 2};
  for (int s = 0; s < 3; ++s) {
    CHECK(max_abs(partial_transpose(m, dims, static_cast<std::size_t>(s)) - oracle::partial_transpose(m, dims, s)) == 0.0);
  }
}

TEST_CASE("partial transpose examples and involution") {
  const ComplexMatrix d = diag({0.1, 0.2, 0.3, 0.4, 0.0, 0.0, 0.0, 0.0});
  CHECK(max_abs(partial_transpose(d, DimTriple(2, 2, 2), Party::kB) - d) == 0.0);

  const ComplexMatrix rho_a = random_hermitian(2, 8);
  const ComplexMatrix rho_bc = random_hermitian(4, 9);
  CHECK(max_abs(partial_transpose(kron(rho_a, rho_bc), DimTriple(2, 2, 2), Party::kA) -
                kron(rho_a.transpose(), rho_bc)) < 1e-15);

  const ComplexMatrix bta = partial_transpose(bound_state().matrix(), DimTriple(2, 2, 2), Party::kA);
  CHECK(bta(0, 7) == Complex(0));
  CHECK(bta(7, 0) == Complex(0));
  CHECK(bta(4, 3) == Complex(1.0 / 6.0));  // |100><011|
  CHECK(bta(3, 4) == Complex(1.0 / 6.0));

  for (std::uint64_t s = 0; s < 10; ++s) {
    const ComplexMatrix m = random_hermitian(8, s);
    for (Party p : {Party::kA, Party::kB, Party::kC}) {
      const ComplexMatrix twice = partial_transpose(partial_transpose(m, DimTriple(2, 2, 2), p), DimTriple(2, 2, 2), p);
      CHECK(max_abs(twice - m) == 0.0);
    }
  }
  const std::vector<int> bad{2, 2};
  CHECK_THROWS_AS(partial_transpose(random_hermitian(8, 1), bad, 0), Error);
}

TEST_CASE("partial trace against direct summation oracle") {
  using V = std::vector<bool>;
  for (const auto& [name, st] : pool::qubit_pool(6)) {
    for (const V& keep : {V{true, false, false}, V{false, true, false}, V{false, false, true}, V{true, true, false},
                          V{true, false, true}, V{false, true, true}, V{true, true, true}}) {
      const std::vector<int> dims{2, 2, 2};
      CHECK_MESSAGE(max_abs(partial_trace(st.matrix(), dims, keep) - oracle::partial_trace(st.matrix(), dims, keep)) < 1e-15, name);
    }
  }
  const ComplexMatrix m = random_hermitian(18, 4);
  const std::vector<int> dims{3, 2, 3};
  CHECK(max_abs(partial_trace(m, dims, {true, false, true}) - oracle::partial_trace(m, dims, {true, false, true})) < 1e-12);
}

TEST_CASE("partial trace examples") {
  const DimTriple q(2, 2, 2);
  CHECK(max_abs(partial_trace(ghz_state().matrix(), q, {Party::kA}) - ComplexMatrix::Identity(2, 2) / 2.0) < 1e-15);
  CHECK(max_abs(partial_trace(bound_state().matrix(), q, {Party::kA}) - diag({0.5, 0.5})) < 1e-15);
  const ComplexMatrix m = bound_state().matrix();
  CHECK(max_abs(partial_trace(m, q, {Party::kA, Party::kB, Party::kC}) - m) == 0.0);
}

TEST_CASE("hermitian spectrum") {
  const Spectrum s = hermitian_spectrum(diag({3, 1, 2}));
  CHECK(s.values() == std::vector<double>{3, 2, 1});

  const Spectrum b = hermitian_spectrum(bound_state().matrix());
  const std::vector<double> expect{1.0 / 3, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 0, 0, 0};
  for (std::size_t i = 0; i < 8; ++i) CHECK(b[i] == doctest::Approx(expect[i]).epsilon(1e-12));

  const Spectrum bt = hermitian_spectrum(partial_transpose(bound_state().matrix(), DimTriple(2, 2, 2), Party::kA));
  for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(bt[i] - 1.0 / 6) < 1e-12);
  CHECK(std::abs(bt[7] + 1.0 / 6) < 1e-12);

  ComplexMatrix nh = diag({1, 2});
  nh(0, 1) = 0.5;
  CHECK_THROWS_AS(hermitian_spectrum(nh), Error);
  try {
    hermitian_spectrum(nh);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotHermitian);
  }

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix m = random_hermitian(8, seed);
    CHECK(std::abs(hermitian_spectrum(m).sum() - m.trace().real()) < 1e-10);
  }
}

TEST_CASE("trace powers") {
  const ComplexMatrix rho = bound_state().matrix();
  CHECK(std::abs(trace_power(rho, 2) - 2.0 / 9) < 1e-15);
  CHECK(std::abs(trace_power(partial_transpose(rho, DimTriple(2, 2, 2), Party::kA), 3) - 1.0 / 36) < 1e-15);
  for (int k = 1; k <= 6; ++k) {
    CHECK(std::abs(trace_power(ComplexMatrix::Identity(8, 8) / 8.0, k) - std::pow(8.0, 1 - k)) < 1e-15);
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ComplexMatrix m = random_hermitian(6, s);
    CHECK(std::abs(trace_power(m, 2) - m.cwiseAbs2().sum()) < 1e-12 * std::max(1.0, m.cwiseAbs2().sum()));
    const auto p = trace_powers(m, 5);
    CHECK(p[0] == 6.0);
    for (int k = 1; k <= 5; ++k) CHECK(std::abs(p[static_cast<std::size_t>(k)] - oracle::trace_power(m, k)) < 1e-9 * std::max(1.0, std::abs(p[static_cast<std::size_t>(k)])));
  }
}

TEST_CASE("second moment is invariant under partial transposition") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const TripartiteState rho = random_state(DimTriple(2, 2, 2), 8, 40 + s);
    const double t2 = trace_power(rho.matrix(), 2);
    for (Party p : {Party::kA, Party::kB, Party::kC}) {
      CHECK(std::abs(trace_power(partial_transpose(rho.matrix(), rho.dims(), p), 2) - t2) < 1e-12);
    }
  }
}

TEST_CASE("trace norm") {
  CHECK(std::abs(trace_norm(bound_state().matrix()) - 1.0) < 1e-12);
  CHECK(std::abs(trace_norm(partial_transpose(bound_state().matrix(), DimTriple(2, 2, 2), Party::kA)) - 4.0 / 3) < 1e-12);
  CHECK(std::abs(trace_norm(diag({1, -1})) - 2.0) < 1e-15);
}

TEST_CASE("density matrix predicate") {
  CHECK(is_density_matrix(bound_state().matrix()));
  CHECK_FALSE(is_density_matrix(diag({1.5, -0.5})));
  CHECK_FALSE(is_density_matrix(diag({0.5, 0.4})));
}
