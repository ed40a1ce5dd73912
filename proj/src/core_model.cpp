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

#include "superscrambler/core_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace superscrambler {

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_site(std::size_t site, std::size_t n_qubits) {
  if (site >= n_qubits) {
    throw std::out_of_range("site " + std::to_string(site + 1) +
                            " out of range for " + std::to_string(n_qubits) +
                            " qubits");
  }
}

std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

} // namespace

XYStringIndex::XYStringIndex(std::size_t n, std::uint64_t mask)
    : n_qubits(n), y_mask(mask) {
  if (n == 0 || n > 64) {
    throw std::invalid_argument("XYStringIndex supports 1..64 qubits");
  }
  if (n < 64 && (mask >> n) != 0) {
    throw std::invalid_argument("y_mask has bits beyond n_qubits");
  }
}

std::string XYStringIndex::label() const {
  std::string out(n_qubits, 'X');
  for (std::size_t i = 0; i < n_qubits; ++i) {
    if ((y_mask >> i) & 1U) {
      out[i] = 'Y';
    }
  }
  return out;
}

XYStringIndex XYStringIndex::from_label(const std::string &label) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == 'Y') {
      mask |= std::uint64_t{1} << i;
    } else if (label[i] != 'X') {
      throw std::invalid_argument("X/Y string may only contain X and Y: " + label);
    }
  }
  return XYStringIndex(label.size(), mask);
}

SuperPauli::SuperPauli(std::size_t n_qubits) : x_(n_qubits), z_(n_qubits) {
  if (n_qubits == 0) {
    throw std::invalid_argument("SuperPauli needs at least one qubit");
  }
}

SuperPauli::SuperPauli(BitVector x, BitVector z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size() || x_.size() == 0) {
    throw std::invalid_argument("SuperPauli masks must be non-empty and equal length");
  }
}

SuperPauli SuperPauli::single_x(std::size_t n_qubits, std::size_t site) {
  check_site(site, n_qubits);
  SuperPauli p(n_qubits);
  p.set_x(site, true);
  return p;
}

SuperPauli SuperPauli::single_z(std::size_t n_qubits, std::size_t site) {
  check_site(site, n_qubits);
  SuperPauli p(n_qubits);
  p.set_z(site, true);
  return p;
}

SuperPauli SuperPauli::from_label(const std::string &label) {
  SuperPauli p(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    switch (label[i]) {
    case 'I':
      break;
    case 'X':
      p.set_x(i, true);
      break;
    case 'Z':
      p.set_z(i, true);
      break;
    case 'Y':
      p.set_x(i, true);
      p.set_z(i, true);
      break;
    default:
      throw std::invalid_argument(std::string("invalid super-Pauli character '") +
                                  label[i] + "'");
    }
  }
  return p;
}

std::string SuperPauli::label() const {
  static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
  std::string out(n_qubits(), 'I');
  for (std::size_t i = 0; i < n_qubits(); ++i) {
    out[i] = kChars[int(x(i)) | (int(z(i)) << 1)];
  }
  return out;
}

BitVector SuperPauli::interleaved() const {
  BitVector v(2 * n_qubits());
  for (std::size_t i = 0; i < n_qubits(); ++i) {
    v.set(2 * i, x(i));
    v.set(2 * i + 1, z(i));
  }
  return v;
}

bool SuperPauli::commutes_with(const SuperPauli &other) const {
  if (other.n_qubits() != n_qubits()) {
    throw std::invalid_argument("SuperPauli size mismatch");
  }
  return odd_overlap(x_.words(), other.z_.words()) ==
         odd_overlap(z_.words(), other.x_.words());
}

SuperGate make_t(std::size_t site) { return TGate{site}; }

SuperGate make_swap(std::size_t site_a, std::size_t site_b) {
  return SwapGate{site_a, site_b};
}

SuperGate make_c3(std::size_t control, std::size_t target_1, std::size_t target_2) {
  return C3Gate{control, std::min(target_1, target_2), std::max(target_1, target_2)};
}

void validate_gate(const SuperGate &gate, std::size_t n_qubits) {
  std::visit(overloaded{
                 [&](const TGate &g) { check_site(g.site, n_qubits); },
                 [&](const SwapGate &g) {
                   check_site(g.site_a, n_qubits);
                   check_site(g.site_b, n_qubits);
                   if (g.site_a == g.site_b) {
                     throw std::invalid_argument("repeated index in SWAP");
                   }
                 },
                 [&](const C3Gate &g) {
                   check_site(g.control, n_qubits);
                   check_site(g.target_1, n_qubits);
                   check_site(g.target_2, n_qubits);
                   if (g.control == g.target_1 || g.control == g.target_2 ||
                       g.target_1 == g.target_2) {
                     throw std::invalid_argument("repeated index in C3");
                   }
                 },
             },
             gate);
}

std::string to_string(const SuperGate &gate) {
  auto s = [](std::size_t site) { return std::to_string(site + 1); };
  return std::visit(
      overloaded{
          [&](const TGate &g) { return "T " + s(g.site); },
          [&](const SwapGate &g) { return "SWAP " + s(g.site_a) + " " + s(g.site_b); },
          [&](const C3Gate &g) {
            return "C3 " + s(g.control) + " " + s(g.target_1) + " " + s(g.target_2);
          },
      },
      gate);
}

OperatorProgram::OperatorProgram(std::size_t n_qubits, std::vector<SuperGate> gates)
    : n_qubits_(n_qubits) {
  if (n_qubits == 0) {
    throw std::invalid_argument("program needs at least one qubit");
  }
  gates_.reserve(gates.size());
  append(gates);
}

void OperatorProgram::push_back(const SuperGate &gate) {
  validate_gate(gate, n_qubits_);
  gates_.push_back(gate);
}

void OperatorProgram::append(const std::vector<SuperGate> &gates) {
  for (const auto &g : gates) {
    push_back(g);
  }
}

SuperPauli conjugate(const SuperPauli &pauli, const SuperGate &gate) {
  validate_gate(gate, pauli.n_qubits());
  SuperPauli out = pauli;
  std::visit(overloaded{
                 [&](const TGate &g) {
                   out.set_x(g.site, pauli.z(g.site));
                   out.set_z(g.site, pauli.x(g.site));
                 },
                 [&](const SwapGate &g) {
                   out.set_x(g.site_a, pauli.x(g.site_b));
                   out.set_z(g.site_a, pauli.z(g.site_b));
                   out.set_x(g.site_b, pauli.x(g.site_a));
                   out.set_z(g.site_b, pauli.z(g.site_a));
                 },
                 [&](const C3Gate &g) {
                   const bool cx = pauli.x(g.control);
                   out.set_z(g.control, pauli.z(g.control) ^ pauli.x(g.target_1) ^
                                            pauli.z(g.target_1) ^ pauli.x(g.target_2) ^
                                            pauli.z(g.target_2));
                   for (std::size_t t : {g.target_1, g.target_2}) {
                     out.set_x(t, pauli.x(t) ^ cx);
                     out.set_z(t, pauli.z(t) ^ cx);
                   }
                 },
             },
             gate);
  return out;
}

OperatorProgram reverse_from_state_space(std::vector<SuperGate> gates,
                                         std::size_t n_qubits) {
  std::reverse(gates.begin(), gates.end());
  return OperatorProgram(n_qubits, std::move(gates));
}

std::vector<SuperGate> localize_c3(const C3Gate &gate, std::size_t n_qubits) {
  validate_gate(gate, n_qubits);
  const std::size_t control = gate.control;
  std::size_t near = gate.target_1;
  std::size_t far = gate.target_2;
  if (distance(control, near) > distance(control, far)) {
    std::swap(near, far);
  }

  std::vector<SuperGate> swaps;
  auto walk = [&](std::size_t &pos, std::size_t dest) {
    while (pos != dest) {
      const std::size_t next = pos < dest ? pos + 1 : pos - 1;
      swaps.push_back(make_swap(std::min(pos, next), std::max(pos, next)));
      pos = next;
    }
  };

  // The nearer target never crosses the farther one on its way in, and the
  // farther one stops short of the block {control, near}.
  walk(near, near > control ? control + 1 : control - 1);
  const bool same_side = (near > control) == (far > control);
  std::size_t far_dest;
  if (same_side) {
    far_dest = near > control ? near + 1 : near - 1;
  } else {
    far_dest = far > control ? control + 1 : control - 1;
  }
  walk(far, far_dest);

  std::vector<SuperGate> out(swaps.begin(), swaps.end());
  out.push_back(make_c3(control, near, far));
  out.insert(out.end(), swaps.rbegin(), swaps.rend());
  return out;
}

} // namespace superscrambler
