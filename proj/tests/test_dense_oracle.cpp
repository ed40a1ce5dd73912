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

#include <doctest.h>

#include <cmath>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "superscrambler/dense_oracle.hpp"
#include "superscrambler/experiments.hpp"
#include "superscrambler/gate_tables.hpp"
#include "support.hpp"

using namespace superscrambler;
using cd = std::complex<double>;

namespace {

OperatorWavefunctiond random_state(std::mt19937_64 &rng, std::size_t n) {
  std::normal_distribution<double> g;
  OperatorWavefunctiond::Vector v(Eigen::Index(1) << n);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    v(k) = cd(g(rng), g(rng));
  }
  v.normalize();
  return OperatorWavefunctiond::from_amplitudes(n, v);
}

OperatorWavefunctiond basis(const std::string &label) {
  const auto idx = XYStringIndex::from_label(label);
  OperatorWavefunctiond::Vector v = OperatorWavefunctiond::Vector::Zero(Eigen::Index(1) << idx.n_qubits);
  v(Eigen::Index(idx.y_mask)) = 1;
  return OperatorWavefunctiond::from_amplitudes(idx.n_qubits, v);
}

// Entropy through the reduced density matrix rather than the SVD.
double entropy_via_density_matrix(const OperatorWavefunctiond &psi, const Region &region) {
  const Eigen::MatrixXcd m = oracle::bipartite_matrix(psi, region);
  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double p = es.eigenvalues()(k);
    if (p > 1e-14) {
      s -= p * std::log2(p);
    }
  }
  return s;
}

double max_abs(const OperatorWavefunctiond::Vector &v) { return v.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("all-X oracle state") {
  const auto psi = OperatorWavefunctiond::all_x(2);
  CHECK(psi.amplitudes()(0) == cd(1));
  CHECK(max_abs(psi.amplitudes().tail(3)) == 0);
  CHECK(OperatorWavefunctiond::all_x(1).amplitudes().size() == 2);
  CHECK(oracle::entropy(OperatorWavefunctiond::all_x(4), Region::prefix(2)) == doctest::Approx(0));
  CHECK_THROWS_AS(OperatorWavefunctiond::all_x(0), std::invalid_argument);
  CHECK_THROWS_AS(OperatorWavefunctiond::all_x(17), std::invalid_argument);
  CHECK(psi[XYStringIndex(2, 0)] == cd(1));
}

TEST_CASE("T acts as Z.H on the X/Y pair") {
  const double r = 1 / std::sqrt(2.0);
  auto a = OperatorWavefunctiond::all_x(1);
  oracle::apply_t(a, 0);
  CHECK(std::abs(a.amplitudes()(0) - r) < 1e-15);
  CHECK(std::abs(a.amplitudes()(1) + r) < 1e-15);

  auto b = basis("Y");
  oracle::apply_t(b, 0);
  CHECK(std::abs(b.amplitudes()(0) - r) < 1e-15);
  CHECK(std::abs(b.amplitudes()(1) - r) < 1e-15);

  oracle::apply_t(a, 0);
  CHECK(std::abs(a.amplitudes()(0)) < 1e-15);
  CHECK(std::abs(a.amplitudes()(1) + 1.0) < 1e-15);
  CHECK_THROWS_AS(oracle::apply_t(a, 1), std::out_of_range);
}

TEST_CASE("(Z.H)^4 = -1 and (Z.H)^8 = 1") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi0 = random_state(rng, 3);
    auto psi = psi0;
    for (int k = 0; k < 4; ++k) {
      oracle::apply_t(psi, 1);
    }
    CHECK(max_abs(psi.amplitudes() + psi0.amplitudes()) < 1e-12);
    for (int k = 0; k < 4; ++k) {
      oracle::apply_t(psi, 1);
    }
    CHECK(max_abs(psi.amplitudes() - psi0.amplitudes()) < 1e-12);
  }
}

TEST_CASE("SWAP permutes string labels") {
  auto psi = basis("XY");
  oracle::apply_swap(psi, 0, 1);
  CHECK(max_abs(psi.amplitudes() - basis("YX").amplitudes()) == 0);
  oracle::apply_swap(psi, 0, 1);
  CHECK(max_abs(psi.amplitudes() - basis("XY").amplitudes()) == 0);

  OperatorWavefunctiond::Vector v(4);
  v << 0.5, cd(0, 0.5), cd(0, 0.5), -0.5;
  auto sym = OperatorWavefunctiond::from_amplitudes(2, v);
  oracle::apply_swap(sym, 1, 0);
  CHECK(max_abs(sym.amplitudes() - v) == 0);
  CHECK_THROWS_AS(oracle::apply_swap(sym, 1, 1), std::invalid_argument);
}

TEST_CASE("C3 reproduces every signed row of the conjugation table") {
  struct Row {
    const char *in;
    double sign;
    const char *out;
  };
  const Row rows[] = {{"XXX", 1, "XXX"},  {"XXY", 1, "XXY"}, {"XYX", 1, "XYX"},
                      {"XYY", 1, "XYY"},  {"YXX", -1, "YYY"}, {"YXY", 1, "YYX"},
                      {"YYX", 1, "YXY"}, {"YYY", -1, "YXX"}};
  for (const auto &row : rows) {
    CAPTURE(row.in);
    auto psi = basis(row.in);
    oracle::apply_c3(psi, 0, 1, 2);
    CHECK(max_abs(psi.amplitudes() - row.sign * basis(row.out).amplitudes()) < 1e-15);
  }
  CHECK_THROWS_AS(oracle::apply_c3(OperatorWavefunctiond::all_x(3) = basis("XXX"), 0, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("C3 equals two controlled-Y maps sharing the control") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_state(rng, 5);
    auto b = a;
    oracle::apply_c3(a, 3, 0, 4);
    oracle::apply_cy(b, 3, 0);
    oracle::apply_cy(b, 3, 4);
    CHECK(max_abs(a.amplitudes() - b.amplitudes()) < 1e-15);
  }
}

TEST_CASE("oracle gates preserve the norm") {
  std::mt19937_64 rng(6);
  auto psi = OperatorWavefunctiond::all_x(8);
  const auto p = testing::random_program(rng, 8, 500);
  for (const auto &g : p.gates()) {
    oracle::apply(psi, g);
    REQUIRE(std::abs(psi.norm() - 1.0) < 1e-9);
  }
}

TEST_CASE("oracle entropy") {
  OperatorWavefunctiond::Vector ghz = OperatorWavefunctiond::Vector::Zero(8);
  ghz(0) = ghz(7) = 1 / std::sqrt(2.0);
  const auto psi = OperatorWavefunctiond::from_amplitudes(3, ghz);
  CHECK(oracle::entropy(psi, Region::prefix(1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(oracle::entropy(psi, Region::from_sites({1})) == doctest::Approx(1.0).epsilon(1e-12));

  auto product = OperatorWavefunctiond::all_x(4);
  oracle::apply_t(product, 0);
  oracle::apply_t(product, 3);
  CHECK(std::abs(oracle::entropy(product, Region::prefix(2))) < 1e-12);

  CHECK_THROWS_AS(oracle::entropy(psi, Region()), std::invalid_argument);
  CHECK_THROWS_AS(oracle::entropy(psi, Region::prefix(3)), std::invalid_argument);
  CHECK_THROWS_AS(oracle::entropy(psi, Region::from_sites({5})), std::out_of_range);
}

TEST_CASE("k copies of the operator GHZ state") {
  // Triples (j, k+j, 2k+j) in (|000> + |111>)/sqrt2, built amplitude by amplitude.
  for (std::size_t k = 1; k <= 4; ++k) {
    const std::size_t n = 3 * k;
    OperatorWavefunctiond::Vector v = OperatorWavefunctiond::Vector::Zero(Eigen::Index(1) << n);
    for (std::size_t choice = 0; choice < (std::size_t{1} << k); ++choice) {
      std::size_t mask = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if ((choice >> j) & 1U) {
          mask |= (std::size_t{1} << j) | (std::size_t{1} << (k + j)) |
                  (std::size_t{1} << (2 * k + j));
        }
      }
      v(Eigen::Index(mask)) = std::pow(2.0, -double(k) / 2);
    }
    const auto psi = OperatorWavefunctiond::from_amplitudes(n, v);
    CHECK(oracle::entropy(psi, Region::prefix(k)) == doctest::Approx(double(k)).epsilon(1e-12));
  }
}

TEST_CASE("SVD and density-matrix entropies agree") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 7;
    auto psi = OperatorWavefunctiond::all_x(n);
    if (n >= 3) {
      oracle::apply_program(psi, testing::random_program(rng, n, 60));
    } else {
      psi = random_state(rng, n);
    }
    const auto region = Region::from_sites({0, n - 1});
    if (region.size() == n) {
      continue;
    }
    CHECK(oracle::entropy(psi, region) ==
          doctest::Approx(entropy_via_density_matrix(psi, region)).epsilon(1e-9));
  }
}

TEST_CASE("stabilizer checks") {
  const auto psi = OperatorWavefunctiond::all_x(3);
  CHECK(oracle::check_stabilized(psi, SuperPauli::single_z(3, 0)) == oracle::Stabilized::plus);
  CHECK(oracle::check_stabilized(psi, SuperPauli::single_x(3, 0)) ==
        oracle::Stabilized::not_stabilized);

  auto t = OperatorWavefunctiond::all_x(1);
  oracle::apply_t(t, 0);
  // Z -> -X: the evolved state is stabilized by -X.
  CHECK(oracle::check_stabilized(t, SuperPauli::from_label("X")) == oracle::Stabilized::minus);
  CHECK_THROWS_AS(oracle::check_stabilized(t, SuperPauli::from_label("XX")),
                  std::invalid_argument);
}

TEST_CASE("tableau and oracle co-evolve") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto r = co_evolve_with_oracle(n, 120, 1000 + n, 5);
    CHECK_MESSAGE(r.agreed, r.first_failure);
    CHECK(r.max_entropy_deviation < 1e-6);
  }
}

TEST_CASE("tableau matches oracle on non-contiguous regions and mixed gates") {
  std::mt19937_64 rng(31);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const auto p = testing::random_program(rng, n, 80);
    auto t = SuperStabilizerTableau::all_x(n);
    t.apply_program(p);
    auto psi = OperatorWavefunctiond::all_x(n);
    oracle::apply_program(psi, p);
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) {
        sites.push_back(i);
      }
    }
    const auto region = Region::from_sites(sites);
    if (region.empty() || region.size() == n) {
      continue;
    }
    CHECK(std::abs(oracle::entropy(psi, region) - double(entropy(t, region))) < 1e-6);
    for (const auto &s : t.stabilizers()) {
      CHECK(oracle::check_stabilized(psi, s) != oracle::Stabilized::not_stabilized);
    }
  }
}

TEST_CASE("gate tables verify") {
  const auto report = verify_gate_tables();
  CHECK(report.all_passed());
  REQUIRE(report.checks.size() == 11);
  CHECK(report.checks[0].name == "T^dag X T = (X - Y)/sqrt2");
  CHECK(report.checks[0].max_deviation < 1e-12);
  CHECK(report.checks[2].name == "SWAP^dag X1Y2 SWAP = Y1X2");
  CHECK(report.checks[7].name == "C3^dag Y1X2X3 C3 = -Y1Y2Y3");
  CHECK(report.checks[7].passed);
  CHECK(report.subspace_closed);
  CHECK(report.subspace_leakage < 1e-12);
  CHECK(report.alternate_reading_passes);
  CHECK_FALSE(report.c3_convention.empty());
}

TEST_CASE("corrupted C3 factor order is reported") {
  // CZ_12 moved to the far left: CZ_12 CX_21 CX_31 T_1^6 T_2^6.
  const Eigen::Matrix2cd p0 = (Eigen::Matrix2cd() << 1, 0, 0, 0).finished();
  const Eigen::Matrix2cd p1 = (Eigen::Matrix2cd() << 0, 0, 0, 1).finished();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  auto k3 = [](const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b, const Eigen::Matrix2cd &c) {
    return Eigen::MatrixXcd(Eigen::kroneckerProduct(Eigen::MatrixXcd(Eigen::kroneckerProduct(a, b)), c));
  };
  const Eigen::Matrix2cd x = pauli_matrix("X");
  const Eigen::Matrix2cd z = pauli_matrix("Z");
  const Eigen::MatrixXcd cx21 = k3(id, p0, id) + k3(x, p1, id);
  const Eigen::MatrixXcd cx31 = k3(id, id, p0) + k3(x, id, p1);
  const Eigen::MatrixXcd cz12 = k3(p0, id, id) + k3(p1, z, id);
  Eigen::Matrix2cd t6 = Eigen::Matrix2cd::Zero();
  t6(0, 0) = 1;
  t6(1, 1) = std::polar(1.0, 6 * M_PI / 4);
  const Eigen::MatrixXcd ts = k3(t6, t6, id);

  // Sanity: the correct order rebuilt here matches the library matrix.
  CHECK((Matrix8cd(cx21 * cx31 * cz12 * ts) - c3_state_matrix()).cwiseAbs().maxCoeff() < 1e-15);

  const auto report = verify_gate_tables(Matrix8cd(cz12 * cx21 * cx31 * ts));
  CHECK_FALSE(report.all_passed());
  std::size_t failed = 0;
  for (const auto &c : report.checks) {
    if (!c.passed) {
      ++failed;
      CHECK(c.name.rfind("C3^dag", 0) == 0);
    }
  }
  CHECK(failed > 0);
}

TEST_CASE("no unitary induces a super-CNOT on X/Y strings") {
  // A putative super-CNOT would send X1X2 -> X1X2 and Y1X2 -> Y1Y2. Conjugation
  // by a unitary preserves commutation, but X1X2 and Y1X2 anticommute while
  // their images commute, so no state-space gate can act this way.
  auto commutator = [](const char *a, const char *b) {
    const Eigen::MatrixXcd pa = pauli_matrix(a);
    const Eigen::MatrixXcd pb = pauli_matrix(b);
    return (pa * pb - pb * pa).cwiseAbs().maxCoeff();
  };
  CHECK(commutator("XX", "YX") > 1);
  CHECK(commutator("XX", "YY") < 1e-15);
}
