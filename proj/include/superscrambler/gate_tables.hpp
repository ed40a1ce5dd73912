// Copyright 2026 The Super Scrambler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERSCRAMBLER_GATE_TABLES_HPP
#define SUPERSCRAMBLER_GATE_TABLES_HPP

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace superscrambler {

// State-space matrices use the computational basis with qubit 1 in the most
// significant tensor slot, T = diag(1, e^{i pi/4}) and the standard Paulis.
using Matrix8cd = Eigen::Matrix<std::complex<double>, 8, 8>;

/// Kronecker product of single-qubit Paulis, e.g. "XIY".
Eigen::MatrixXcd pauli_matrix(std::string_view label);

/// How to read the product CX_21 CX_31 CZ_12 T_1^6 T_2^6.
enum class C3FactorOrder {
  rightmost_first, // ordinary matrix product: T_2^6 acts on the state first
  leftmost_first,  // CX_21 acts first
};

Matrix8cd c3_state_matrix(C3FactorOrder order = C3FactorOrder::rightmost_first);

struct IdentityCheck {
  std::string name;
  double max_deviation;
  bool passed;
};

struct GateTableReport {
  std::vector<IdentityCheck> checks;
  /// Largest weight a conjugated X/Y string puts on strings with I or Z.
  double subspace_leakage = 0;
  bool subspace_closed = false;
  std::string c3_convention;
  bool alternate_reading_passes = false;

  bool all_passed() const;
};

inline constexpr double kGateTableTolerance = 1e-12;

/// Conjugates explicit state-space matrices: the two T lines, the SWAP line
/// and the eight signed C3 lines, plus X/Y subspace closure under C3.
GateTableReport verify_gate_tables();
/// Same checks with a caller-supplied C3 matrix.
GateTableReport verify_gate_tables(const Matrix8cd &c3);

} // namespace superscrambler

#endif // SUPERSCRAMBLER_GATE_TABLES_HPP
