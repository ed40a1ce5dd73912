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

#ifndef SUPERSCRAMBLER_TABLEAU_HPP
#define SUPERSCRAMBLER_TABLEAU_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "superscrambler/core_model.hpp"
#include "superscrambler/gf2.hpp"

namespace superscrambler {

/// Set of sites (0-based, sorted, unique) on one side of a bipartition.
class Region {
public:
  Region() = default;

  /// Sites {0, ..., p-1}, i.e. the first p qubits.
  static Region prefix(std::size_t p);
  static Region from_sites(std::vector<std::size_t> sites);
  /// 1-based comma separated sites and ranges: "1-4,7".
  static Region parse(std::string_view text);

  const std::vector<std::size_t> &sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }

  Region complement(std::size_t n_qubits) const;
  /// Throws std::out_of_range if any site is >= n_qubits.
  void validate(std::size_t n_qubits) const;
  /// 1-based, ranges collapsed: "1-4,7".
  std::string to_string() const;

  bool operator==(const Region &) const = default;

private:
  std::vector<std::size_t> sites_;
};

/// N super-stabilizers, i.e. the 2N x N binary matrix V whose column alpha
/// is the symplectic vector of stabilizer alpha.
///
/// Storage is by bit-row of V: x_plane().row(i) holds v_{ix} for every
/// stabilizer, packed 64 stabilizers per word, and likewise z_plane(). Every
/// super-gate then touches a handful of rows with word-wide XORs.
class SuperStabilizerTableau {
public:
  /// Stabilizers Z_1, ..., Z_N of the operator X_1 X_2 ... X_N.
  static SuperStabilizerTableau all_x(std::size_t n_qubits);

  /// Throws std::invalid_argument unless there are exactly N stabilizers of
  /// length N that commute pairwise and are linearly independent.
  static SuperStabilizerTableau from_stabilizers(const std::vector<SuperPauli> &stabilizers);

  std::size_t n_qubits() const { return n_; }
  SuperPauli stabilizer(std::size_t alpha) const;
  std::vector<SuperPauli> stabilizers() const;

  const BitMatrix &x_plane() const { return x_; }
  const BitMatrix &z_plane() const { return z_; }

  // X -> Z, Z -> -X on the site: exchanges v_{ix} and v_{iz}.
  void apply_t(std::size_t site);
  void apply_swap(std::size_t site_a, std::size_t site_b);
  // CY(c, t1) CY(c, t2) by conjugation:
  //   v_cz += v_1x + v_1z + v_2x + v_2z,  v_tx += v_cx,  v_tz += v_cx.
  void apply_c3(std::size_t control, std::size_t target_1, std::size_t target_2);
  void apply(const SuperGate &gate);
  void apply_program(const OperatorProgram &program);

  bool commuting() const;
  bool independent() const;
  /// Throws std::logic_error if the stabilizers stopped commuting or became
  /// dependent.
  void check_invariants() const;

  bool operator==(const SuperStabilizerTableau &) const = default;

private:
  explicit SuperStabilizerTableau(std::size_t n_qubits);

  void check_site(std::size_t site) const;

  std::size_t n_;
  BitMatrix x_;
  BitMatrix z_;
};

/// Operator entanglement entropy in bits: rank of the 2|A| rows of V that
/// belong to sites in A, minus |A|.
std::size_t entropy(const SuperStabilizerTableau &tableau, const Region &region);

/// One stabilizer per line over {I, X, Z, Y}; every line ends in '\n'.
std::string dump_stabilizers(const SuperStabilizerTableau &tableau);
SuperStabilizerTableau parse_stabilizers(std::string_view text);

} // namespace superscrambler

#endif // SUPERSCRAMBLER_TABLEAU_HPP
