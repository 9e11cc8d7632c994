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

// Gate-level simulation of the two-stage interferometer network.
//
// Stage one: each observer X holds k copies of subsystem X plus ancilla X1.
// Hadamard on the ancillas, controlled cyclic shift of the k copies of X,
// Hadamard again, then the system registers are traced out.
//
// Stage two: the 8x8 stage-one ancilla state is joined with fresh ancillas
// a2 b2 c2 in |000>; Hadamards, a2 (b2, c2) controls R on a1 (b1, c1),
// Hadamards, and a computational-basis readout of a2 b2 c2.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tripneg/state_factory.hpp"
#include "tripneg/tensor_core.hpp"

namespace tripneg {

enum class Sign { kPlus, kMinus };

/// Which of controlled-R+ / controlled-R- each observer applies in stage two.
struct SignConfig {
  Sign a = Sign::kPlus;
  Sign b = Sign::kPlus;
  Sign c = Sign::kPlus;

  Sign of(Party p) const;
  /// "-++" style label in A, B, C order.
  std::string label() const;
  /// 0..7, bit 2 = A is minus, bit 1 = B, bit 0 = C.
  int index() const;
  static SignConfig from_index(int index);
  /// Parses a three-character label such as "-++"; throws kParse.
  static SignConfig parse(std::string_view label);
  static std::array<SignConfig, 8> all();

  friend bool operator==(const SignConfig&, const SignConfig&) = default;
};

/// Ancilla pairs in the order (a,b), (a,c), (b,c).
enum class AncillaPair { kAB = 0, kAC = 1, kBC = 2 };

const char* pair_name(AncillaPair p);

/// Outcome probabilities P(ijl), index = 4i + 2j + l with i the A ancilla.
class AncillaDistribution {
 public:
  explicit AncillaDistribution(const std::array<double, 8>& probs);

  const std::array<double, 8>& probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  static AncillaDistribution point_mass(int outcome);
  static AncillaDistribution uniform();

 private:
  std::array<double, 8> probs_;
};

/// Joint 8x8 ancilla density matrix (a b c, a most significant).
class AncillaState3 {
 public:
  explicit AncillaState3(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  AncillaDistribution diagonal() const;

 private:
  ComplexMatrix matrix_;
};

struct ShotCounts {
  std::array<std::uint64_t, 8> counts{};
  std::uint64_t total = 0;
};

struct NetworkOptions {
  /// Largest total register dimension (system copies x ancillas) the
  /// dense gate-level path will allocate.
  std::size_t size_cap = 8192;
};

/// Permutation V_k on (dloc)^k with V|p1 p2 .. pk> = |pk p1 .. p(k-1)>.
ComplexMatrix shift_operator(int dloc, int k, std::size_t size_cap = 8192);

ComplexMatrix hadamard();
ComplexMatrix r_plus();
ComplexMatrix r_minus();
ComplexMatrix r_gate(Sign s);

/// |0><0| (x) I + |1><1| (x) u, control qubit first. Throws kNotUnitary.
ComplexMatrix controlled_gate(const ComplexMatrix& u);

/// Total register dimension the gate-level first stage needs.
std::size_t first_stage_dimension(const DimTriple& dims, int k);

AncillaState3 first_stage(const TripartiteState& rho, int k,
                          const NetworkOptions& options = {});

AncillaDistribution second_stage(const AncillaState3& first, SignConfig config);

double measure_zzz(const AncillaDistribution& dist);
double measure_zz(const AncillaDistribution& dist, AncillaPair pair);
double measure_z(const AncillaDistribution& dist, Party single);

/// n categorical draws by inverse CDF. The uniform variate is the top 53
/// bits of std::mt19937_64(seed) output scaled by 2^-53.
ShotCounts sample_shots(const AncillaDistribution& dist, std::uint64_t n,
                        std::uint64_t seed);

AncillaDistribution empirical_distribution(const ShotCounts& counts);

}  // namespace tripneg
