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

#ifndef SUPERSCRAMBLER_CORE_MODEL_HPP
#define SUPERSCRAMBLER_CORE_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "superscrambler/gf2.hpp"

namespace superscrambler {

/// Basis label of the operator space: a Pauli string made only of X and Y.
/// Bit i of `y_mask` set means Y on (0-based) site i, clear means X.
struct XYStringIndex {
  std::size_t n_qubits = 0;
  std::uint64_t y_mask = 0;

  XYStringIndex(std::size_t n, std::uint64_t mask);

  /// "XYX"-style label, site 1 first.
  std::string label() const;
  static XYStringIndex from_label(const std::string &label);

  bool operator==(const XYStringIndex &) const = default;
};

/// One super-stabilizer: X_1^{v1x} Z_1^{v1z} ... X_N^{vNx} Z_N^{vNz}, sign
/// untracked. Sites are 0-based.
class SuperPauli {
public:
  explicit SuperPauli(std::size_t n_qubits);
  SuperPauli(BitVector x, BitVector z);

  static SuperPauli single_x(std::size_t n_qubits, std::size_t site);
  static SuperPauli single_z(std::size_t n_qubits, std::size_t site);

  /// Parses one IXZY line (I=(0,0), X=(1,0), Z=(0,1), Y=(1,1)).
  static SuperPauli from_label(const std::string &label);
  std::string label() const;

  std::size_t n_qubits() const { return x_.size(); }
  const BitVector &x_mask() const { return x_; }
  const BitVector &z_mask() const { return z_; }
  bool x(std::size_t site) const { return x_.get(site); }
  bool z(std::size_t site) const { return z_.get(site); }
  void set_x(std::size_t site, bool v) { x_.set(site, v); }
  void set_z(std::size_t site, bool v) { z_.set(site, v); }

  /// Interleaved (v1x, v1z, ..., vNx, vNz).
  BitVector interleaved() const;

  /// Symplectic product is zero.
  bool commutes_with(const SuperPauli &other) const;

  bool operator==(const SuperPauli &) const = default;

private:
  BitVector x_;
  BitVector z_;
};

struct TGate {
  std::size_t site;
  bool operator==(const TGate &) const = default;
};

struct SwapGate {
  std::size_t site_a;
  std::size_t site_b;
  bool operator==(const SwapGate &) const = default;
};

/// Acts in operator space as CY(control, target_1) CY(control, target_2).
/// Canonical form keeps target_1 < target_2.
struct C3Gate {
  std::size_t control;
  std::size_t target_1;
  std::size_t target_2;
  bool operator==(const C3Gate &) const = default;
};

/// Super-gate instruction; all site indices are 0-based.
using SuperGate = std::variant<TGate, SwapGate, C3Gate>;

SuperGate make_t(std::size_t site);
SuperGate make_swap(std::size_t site_a, std::size_t site_b);
/// Targets are sorted into canonical order.
SuperGate make_c3(std::size_t control, std::size_t target_1,
                  std::size_t target_2);

/// Throws std::out_of_range for indices >= n_qubits and
/// std::invalid_argument for repeated indices within the gate.
void validate_gate(const SuperGate &gate, std::size_t n_qubits);

/// Text form with 1-based sites, e.g. "C3 1 2 3".
std::string to_string(const SuperGate &gate);

/// Ordered super-gates; gates[0] is applied first to the operator-space
/// state.
class OperatorProgram {
public:
  explicit OperatorProgram(std::size_t n_qubits,
                           std::vector<SuperGate> gates = {});

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<SuperGate> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void push_back(const SuperGate &gate);
  void append(const std::vector<SuperGate> &gates);

  bool operator==(const OperatorProgram &) const = default;

private:
  std::size_t n_qubits_;
  std::vector<SuperGate> gates_;
};

/// Image of one super-Pauli under conjugation by the super-gate, sign
/// dropped. Bit-at-a-time; the tableau applies the same rules word-parallel.
SuperPauli conjugate(const SuperPauli &pauli, const SuperGate &gate);

/// Heisenberg evolution under U = U_tau ... U_1 acts on operator space with
/// the last state-space gate first, so the list is reversed.
OperatorProgram reverse_from_state_space(std::vector<SuperGate> gates,
                                         std::size_t n_qubits);

/// Rewrites a long-range C3 as nearest-neighbour SWAPs, one C3 on three
/// adjacent sites, then the same SWAPs mirrored. At most
/// 2 * (|c - t1| + |c - t2|) SWAPs.
std::vector<SuperGate> localize_c3(const C3Gate &gate, std::size_t n_qubits);

} // namespace superscrambler

#endif // SUPERSCRAMBLER_CORE_MODEL_HPP
