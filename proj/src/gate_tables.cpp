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

#include "superscrambler/gate_tables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace superscrambler {

namespace {

using cd = std::complex<double>;

Eigen::Matrix2cd single(char p) {
  Eigen::Matrix2cd m;
  switch (p) {
  case 'I':
    m << 1, 0, 0, 1;
    break;
  case 'X':
    m << 0, 1, 1, 0;
    break;
  case 'Y':
    m << 0, cd(0, -1), cd(0, 1), 0;
    break;
  case 'Z':
    m << 1, 0, 0, -1;
    break;
  default:
    throw std::invalid_argument(std::string("unknown Pauli '") + p + "'");
  }
  return m;
}

Eigen::MatrixXcd kron_all(const std::vector<Eigen::MatrixXcd> &factors) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto &f : factors) {
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(out, f).eval();
    out = std::move(next);
  }
  return out;
}

Eigen::Matrix2cd t_gate() {
  Eigen::Matrix2cd t = Eigen::Matrix2cd::Zero();
  t(0, 0) = 1;
  t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
  return t;
}

// |0><0|_c (x) I + |1><1|_c (x) U_t on three qubits (0-based slots).
Matrix8cd controlled(int control, int target, const Eigen::Matrix2cd &u) {
  Eigen::Matrix2cd p0 = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd p1 = Eigen::Matrix2cd::Zero();
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  std::vector<Eigen::MatrixXcd> a(3, Eigen::Matrix2cd::Identity());
  std::vector<Eigen::MatrixXcd> b(3, Eigen::Matrix2cd::Identity());
  a[control] = p0;
  b[control] = p1;
  b[target] = u;
  return kron_all(a) + kron_all(b);
}

double max_dev(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

IdentityCheck make_check(std::string name, const Eigen::MatrixXcd &lhs,
                         const Eigen::MatrixXcd &rhs) {
  const double d = max_dev(lhs, rhs);
  return {std::move(name), d, d < kGateTableTolerance};
}

struct C3Row {
  const char *input;
  int sign;
  const char *output;
};

// C3^dag P C3 for every X/Y string P on three qubits.
constexpr std::array<C3Row, 8> kC3Rows = {{
    {"XXX", +1, "XXX"},
    {"XXY", +1, "XXY"},
    {"XYX", +1, "XYX"},
    {"XYY", +1, "XYY"},
    {"YXX", -1, "YYY"},
    {"YXY", +1, "YYX"},
    {"YYX", +1, "YXY"},
    {"YYY", -1, "YXX"},
}};

std::string with_sites(const char *label) {
  std::string out;
  for (int k = 0; k < 3; ++k) {
    out += label[k];
    out += char('1' + k);
  }
  return out;
}

void append_c3_checks(const Matrix8cd &c3, std::vector<IdentityCheck> &checks) {
  for (const auto &row : kC3Rows) {
    const Eigen::MatrixXcd lhs = c3.adjoint() * pauli_matrix(row.input) * c3;
    const Eigen::MatrixXcd rhs = double(row.sign) * pauli_matrix(row.output);
    checks.push_back(make_check("C3^dag " + with_sites(row.input) + " C3 = " +
                                    (row.sign < 0 ? "-" : "") + with_sites(row.output),
                                lhs, rhs));
  }
}

double c3_subspace_leakage(const Matrix8cd &c3) {
  static constexpr char kPaulis[4] = {'I', 'X', 'Y', 'Z'};
  double leak = 0;
  for (const auto &row : kC3Rows) {
    const Eigen::MatrixXcd conj = c3.adjoint() * pauli_matrix(row.input) * c3;
    for (int q = 0; q < 64; ++q) {
      const std::string label = {kPaulis[q / 16], kPaulis[(q / 4) % 4], kPaulis[q % 4]};
      if (label.find_first_of("IZ") == std::string::npos) {
        continue;
      }
      const cd coef = (pauli_matrix(label).adjoint() * conj).trace() / 8.0;
      leak = std::max(leak, std::abs(coef));
    }
  }
  return leak;
}

bool c3_rows_pass(const Matrix8cd &c3) {
  std::vector<IdentityCheck> checks;
  append_c3_checks(c3, checks);
  return std::ranges::all_of(checks, &IdentityCheck::passed);
}

} // namespace

Eigen::MatrixXcd pauli_matrix(std::string_view label) {
  std::vector<Eigen::MatrixXcd> factors;
  for (char c : label) {
    factors.emplace_back(single(c));
  }
  return kron_all(factors);
}

Matrix8cd c3_state_matrix(C3FactorOrder order) {
  Eigen::Matrix2cd t6 = Eigen::Matrix2cd::Identity();
  for (int k = 0; k < 6; ++k) {
    t6 = t6 * t_gate();
  }
  const Matrix8cd cx21 = controlled(1, 0, single('X'));
  const Matrix8cd cx31 = controlled(2, 0, single('X'));
  const Matrix8cd cz12 = controlled(0, 1, single('Z'));
  const Matrix8cd t1 = kron_all({t6, Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity()});
  const Matrix8cd t2 = kron_all({Eigen::Matrix2cd::Identity(), t6, Eigen::Matrix2cd::Identity()});
  if (order == C3FactorOrder::rightmost_first) {
    return cx21 * cx31 * cz12 * t1 * t2;
  }
  return t2 * t1 * cz12 * cx31 * cx21;
}

bool GateTableReport::all_passed() const {
  return subspace_closed && std::ranges::all_of(checks, &IdentityCheck::passed);
}

GateTableReport verify_gate_tables(const Matrix8cd &c3) {
  GateTableReport report;
  const Eigen::Matrix2cd t = t_gate();
  const Eigen::Matrix2cd x = single('X');
  const Eigen::Matrix2cd y = single('Y');
  const double r = 1.0 / std::sqrt(2.0);
  report.checks.push_back(
      make_check("T^dag X T = (X - Y)/sqrt2", t.adjoint() * x * t, r * (x - y)));
  report.checks.push_back(
      make_check("T^dag Y T = (X + Y)/sqrt2", t.adjoint() * y * t, r * (x + y)));

  const Eigen::Matrix4cd swap = (Eigen::Matrix4cd() << 1, 0, 0, 0, //
                                 0, 0, 1, 0,                        //
                                 0, 1, 0, 0,                        //
                                 0, 0, 0, 1)
                                    .finished();
  report.checks.push_back(make_check("SWAP^dag X1Y2 SWAP = Y1X2",
                                     swap.adjoint() * pauli_matrix("XY") * swap,
                                     pauli_matrix("YX")));

  append_c3_checks(c3, report.checks);
  report.subspace_leakage = c3_subspace_leakage(c3);
  report.subspace_closed = report.subspace_leakage < kGateTableTolerance;
  report.c3_convention = "caller-supplied C3 matrix";
  return report;
}

GateTableReport verify_gate_tables() {
  GateTableReport report = verify_gate_tables(c3_state_matrix(C3FactorOrder::rightmost_first));
  report.c3_convention = "C3 = CX_21 CX_31 CZ_12 T_1^6 T_2^6 read as a matrix product "
                         "(T_2^6 acts first on states)";
  report.alternate_reading_passes = c3_rows_pass(c3_state_matrix(C3FactorOrder::leftmost_first));
  return report;
}

} // namespace superscrambler
