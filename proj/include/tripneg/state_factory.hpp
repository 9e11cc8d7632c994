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

#include <cstdint>

#include "tripneg/tensor_core.hpp"

namespace tripneg {

/// A validated tripartite density matrix. Construction throws
/// kInvalidState unless the matrix is hermitian, unit-trace and PSD.
class TripartiteState {
 public:
  TripartiteState(DimTriple dims, ComplexMatrix matrix);

  const DimTriple& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return dims_.total(); }

 private:
  DimTriple dims_;
  ComplexMatrix matrix_;
};

/// Mixture weights of the DCT family: lambda_0^+, lambda_0^-, and the
/// weights of the |Psi_k^+-> pairs for k = 01, 10, 11.
struct DctParams {
  double l0_plus = 0.0;
  double l0_minus = 0.0;
  double l01 = 0.0;
  double l10 = 0.0;
  double l11 = 0.0;

  double total_weight() const { return l0_plus + l0_minus + 2.0 * (l01 + l10 + l11); }
};

TripartiteState dct_state(const DctParams& p);

/// The bound entangled member (1/3, 0, 1/6, 0, 1/6) of the DCT family.
TripartiteState bound_state();

TripartiteState ghz_state();
TripartiteState w_state();
TripartiteState maximally_mixed_state(const DimTriple& dims);

/// Normalized G G^dagger with G a d x rank matrix of complex standard
/// normals drawn from std::mt19937_64 seeded with `seed`.
TripartiteState random_state(const DimTriple& dims, int rank, std::uint64_t seed);

/// Haar-distributed d x d unitary (QR of a complex Ginibre matrix).
ComplexMatrix random_unitary(int d, std::uint64_t seed);

TripartiteState product_state(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b,
                              const ComplexMatrix& rho_c);

/// Projector |psi><psi| of a normalized copy of `amplitudes`.
ComplexMatrix pure_projector(const Eigen::VectorXcd& amplitudes);

}  // namespace tripneg
