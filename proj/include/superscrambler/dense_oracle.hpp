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

#ifndef SUPERSCRAMBLER_DENSE_ORACLE_HPP
#define SUPERSCRAMBLER_DENSE_ORACLE_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "superscrambler/core_model.hpp"
#include "superscrambler/tableau.hpp"

namespace superscrambler {

/// Exact operator-space state over the 2^N X/Y strings, amplitude k on the
/// string with y_mask k. Exponential cost; the ground truth for small N.
template <typename Real = double> class OperatorWavefunction {
public:
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  static constexpr std::size_t kMaxQubits = 16;

  /// |00...0>, the operator X_1 X_2 ... X_N.
  static OperatorWavefunction all_x(std::size_t n_qubits) {
    OperatorWavefunction psi(n_qubits);
    psi.amplitudes_(0) = Scalar(1);
    return psi;
  }

  static OperatorWavefunction from_amplitudes(std::size_t n_qubits, Vector amplitudes) {
    OperatorWavefunction psi(n_qubits);
    if (amplitudes.size() != psi.amplitudes_.size()) {
      throw std::invalid_argument("amplitude vector must have length 2^N");
    }
    psi.amplitudes_ = std::move(amplitudes);
    return psi;
  }

  std::size_t n_qubits() const { return n_; }
  std::size_t dimension() const { return std::size_t{1} << n_; }
  const Vector &amplitudes() const { return amplitudes_; }
  Vector &amplitudes() { return amplitudes_; }
  Scalar operator[](const XYStringIndex &s) const { return amplitudes_(Eigen::Index(s.y_mask)); }

  Real norm() const { return amplitudes_.norm(); }

  void check_site(std::size_t site) const {
    if (site >= n_) {
      throw std::out_of_range("site " + std::to_string(site + 1) + " out of range for " +
                              std::to_string(n_) + " qubits");
    }
  }

private:
  explicit OperatorWavefunction(std::size_t n_qubits) : n_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
      throw std::invalid_argument("dense oracle supports 1.." + std::to_string(kMaxQubits) +
                                  " qubits, got " + std::to_string(n_qubits));
    }
    amplitudes_ = Vector::Zero(Eigen::Index(1) << n_qubits);
  }

  std::size_t n_;
  Vector amplitudes_;
};

using OperatorWavefunctiond = OperatorWavefunction<double>;

namespace oracle {

/// Z.H on one site: |0> -> (|0> - |1>)/sqrt2, |1> -> (|0> + |1>)/sqrt2.
template <typename Real> void apply_t(OperatorWavefunction<Real> &psi, std::size_t site) {
  psi.check_site(site);
  const Real r = Real(1) / std::sqrt(Real(2));
  const std::size_t bit = std::size_t{1} << site;
  auto &a = psi.amplitudes();
  for (std::size_t k = 0; k < psi.dimension(); ++k) {
    if (k & bit) {
      continue;
    }
    const auto a0 = a(k);
    const auto a1 = a(k | bit);
    a(k) = r * (a0 + a1);
    a(k | bit) = r * (a1 - a0);
  }
}

template <typename Real>
void apply_swap(OperatorWavefunction<Real> &psi, std::size_t site_a, std::size_t site_b) {
  psi.check_site(site_a);
  psi.check_site(site_b);
  if (site_a == site_b) {
    throw std::invalid_argument("repeated index in SWAP");
  }
  const std::size_t ba = std::size_t{1} << site_a;
  const std::size_t bb = std::size_t{1} << site_b;
  auto &a = psi.amplitudes();
  for (std::size_t k = 0; k < psi.dimension(); ++k) {
    if ((k & ba) && !(k & bb)) {
      std::swap(a(k), a(k ^ ba ^ bb));
    }
  }
}

/// Controlled super-Y with Y|0> = i|1>, Y|1> = -i|0>.
template <typename Real>
void apply_cy(OperatorWavefunction<Real> &psi, std::size_t control, std::size_t target) {
  psi.check_site(control);
  psi.check_site(target);
  if (control == target) {
    throw std::invalid_argument("repeated index in CY");
  }
  using Scalar = typename OperatorWavefunction<Real>::Scalar;
  const Scalar i(0, 1);
  const std::size_t bc = std::size_t{1} << control;
  const std::size_t bt = std::size_t{1} << target;
  auto &a = psi.amplitudes();
  for (std::size_t k = 0; k < psi.dimension(); ++k) {
    if ((k & bc) && !(k & bt)) {
      const Scalar a0 = a(k);
      const Scalar a1 = a(k | bt);
      a(k) = -i * a1;
      a(k | bt) = i * a0;
    }
  }
}

/// CY(c, t1) CY(c, t2). On the target pair Y(x)Y sends |b1 b2> to
/// -|~b1 ~b2> when b1 == b2 and to +|~b1 ~b2> otherwise.
template <typename Real>
void apply_c3(OperatorWavefunction<Real> &psi, std::size_t control, std::size_t target_1,
              std::size_t target_2) {
  psi.check_site(control);
  psi.check_site(target_1);
  psi.check_site(target_2);
  if (control == target_1 || control == target_2 || target_1 == target_2) {
    throw std::invalid_argument("repeated index in C3");
  }
  const std::size_t bc = std::size_t{1} << control;
  const std::size_t b1 = std::size_t{1} << target_1;
  const std::size_t b2 = std::size_t{1} << target_2;
  auto &a = psi.amplitudes();
  for (std::size_t k = 0; k < psi.dimension(); ++k) {
    // Visit each orbit {k, k ^ b1 ^ b2} once, from its member with target_1 clear.
    if (!(k & bc) || (k & b1)) {
      continue;
    }
    const std::size_t partner = k ^ b1 ^ b2;
    const Real sign = (k & b2) ? Real(1) : Real(-1);
    const auto ak = a(k);
    a(k) = sign * a(partner);
    a(partner) = sign * ak;
  }
}

template <typename Real>
void apply(OperatorWavefunction<Real> &psi, const SuperGate &gate) {
  if (const auto *t = std::get_if<TGate>(&gate)) {
    apply_t(psi, t->site);
  } else if (const auto *s = std::get_if<SwapGate>(&gate)) {
    apply_swap(psi, s->site_a, s->site_b);
  } else {
    const auto &c = std::get<C3Gate>(gate);
    apply_c3(psi, c.control, c.target_1, c.target_2);
  }
}

template <typename Real>
void apply_program(OperatorWavefunction<Real> &psi, const OperatorProgram &program) {
  if (program.n_qubits() != psi.n_qubits()) {
    throw std::invalid_argument("program and wavefunction sizes differ");
  }
  for (const auto &g : program.gates()) {
    apply(psi, g);
  }
}

/// Amplitudes reshaped into a 2^|A| x 2^(N-|A|) matrix.
template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>
bipartite_matrix(const OperatorWavefunction<Real> &psi, const Region &region) {
  const Region rest = region.complement(psi.n_qubits());
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> m(
      Eigen::Index(1) << region.size(), Eigen::Index(1) << rest.size());
  for (std::size_t k = 0; k < psi.dimension(); ++k) {
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < region.size(); ++j) {
      row |= Eigen::Index((k >> region.sites()[j]) & 1U) << j;
    }
    for (std::size_t j = 0; j < rest.size(); ++j) {
      col |= Eigen::Index((k >> rest.sites()[j]) & 1U) << j;
    }
    m(row, col) = psi.amplitudes()(Eigen::Index(k));
  }
  return m;
}

/// Von Neumann entropy (bits) of the reduced operator state on `region`,
/// from the spectrum of the smaller reduced density matrix. Eigen 3.4's
/// divide-and-conquer SVD loses accuracy on some complex inputs here.
template <typename Real>
Real entropy(const OperatorWavefunction<Real> &psi, const Region &region) {
  region.validate(psi.n_qubits());
  if (region.empty() || region.size() == psi.n_qubits()) {
    throw std::invalid_argument("oracle entropy needs a nonempty proper subset");
  }
  using Complex = std::complex<Real>;
  using Dense = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  const auto m = bipartite_matrix(psi, region);
  const Dense rho = m.rows() <= m.cols() ? Dense(m * m.adjoint())
                                         : Dense(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<Dense> es(rho, Eigen::EigenvaluesOnly);
  Real s = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const Real p = es.eigenvalues()(k);
    if (p > Real(0)) {
      s -= p * std::log2(p);
    }
  }
  return s;
}

/// The super-Pauli (prod X^{vx}) (prod Z^{vz}) applied to psi.
template <typename Real>
OperatorWavefunction<Real> apply_super_pauli(const OperatorWavefunction<Real> &psi,
                                             const SuperPauli &pauli) {
  if (pauli.n_qubits() != psi.n_qubits()) {
    throw std::invalid_argument("super-Pauli and wavefunction sizes differ");
  }
  const std::uint64_t x = pauli.x_mask().words()[0];
  const std::uint64_t z = pauli.z_mask().words()[0];
  auto out = psi;
  for (std::size_t k = 0; k < psi.dimension(); ++k) {
    const auto amp = psi.amplitudes()(Eigen::Index(k));
    out.amplitudes()(Eigen::Index(k ^ x)) = (std::popcount(k & z) & 1) ? -amp : amp;
  }
  return out;
}

enum class Stabilized { plus, minus, not_stabilized };

/// Whether the super-Pauli fixes psi up to sign (max-norm tolerance).
template <typename Real>
Stabilized check_stabilized(const OperatorWavefunction<Real> &psi, const SuperPauli &pauli,
                            Real tolerance = Real(1e-9)) {
  const auto image = apply_super_pauli(psi, pauli);
  if ((image.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < tolerance) {
    return Stabilized::plus;
  }
  if ((image.amplitudes() + psi.amplitudes()).cwiseAbs().maxCoeff() < tolerance) {
    return Stabilized::minus;
  }
  return Stabilized::not_stabilized;
}

} // namespace oracle
} // namespace superscrambler

#endif // SUPERSCRAMBLER_DENSE_ORACLE_HPP
