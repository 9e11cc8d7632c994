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

// Dense complex-matrix kernel shared by every other module.
//
// Basis convention: computational basis |abc> with A the most significant
// digit, so a tripartite index is i = (a * dB + b) * dC + c.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tripneg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Entrywise max |m - m^dagger| allowed for a matrix to count as hermitian.
inline constexpr double kHermitianTol = 1e-10;
/// Smallest eigenvalue still accepted as "non-negative" for a density matrix.
inline constexpr double kPsdTol = -1e-10;
/// Unit-trace tolerance for density matrices.
inline constexpr double kTraceTol = 1e-10;

enum class Party { kA = 0, kB = 1, kC = 2 };

char party_name(Party p);

struct DimTriple {
  int a = 2;
  int b = 2;
  int c = 2;

  DimTriple() = default;
  DimTriple(int da, int db, int dc);

  int total() const { return a * b * c; }
  int local(Party p) const;
  std::vector<int> as_vector() const { return {a, b, c}; }
  bool all_qubits() const { return a == 2 && b == 2 && c == 2; }

  friend bool operator==(const DimTriple&, const DimTriple&) = default;
};

/// Real eigenvalues sorted non-increasing.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts `values` into non-increasing order.
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const;
  double min() const { return values_.back(); }
  double max() const { return values_.front(); }
  /// Sum of lambda_i^k.
  double power_sum(int k) const;

 private:
  std::vector<double> values_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise |m(i,j) - conj(m(j,i))|; infinity for non-square input.
double hermitian_deviation(const ComplexMatrix& m);

/// Throws kNotHermitian (carrying the deviation) when the check fails.
void require_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Transposes the indices of subsystem `sub` in a matrix on the tensor
/// product of `dims`. Pure index permutation: applying it twice is exact.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const int> dims,
                                std::size_t sub);
ComplexMatrix partial_transpose(const ComplexMatrix& m, const DimTriple& dims,
                                Party sub);

/// Traces out every subsystem not listed in `keep` (kept order follows dims).
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            const std::vector<bool>& keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, const DimTriple& dims,
                            std::initializer_list<Party> keep);

Spectrum hermitian_spectrum(const ComplexMatrix& m);

double trace_power(const ComplexMatrix& m, int k);

/// Tr(m^k) for k = 0..kmax (entry 0 is the dimension).
std::vector<double> trace_powers(const ComplexMatrix& m, int kmax);

double trace_norm(const ComplexMatrix& m);

/// Hermitian, unit trace and PSD within the module tolerances.
bool is_density_matrix(const ComplexMatrix& m);

}  // namespace tripneg
