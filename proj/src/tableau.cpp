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

#include "superscrambler/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <variant>

namespace superscrambler {

namespace {

template <class F> void for_each_set_bit(std::span<const Word> words, F &&f) {
  for (std::size_t k = 0; k < words.size(); ++k) {
    Word w = words[k];
    while (w) {
      f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

std::size_t parse_site(std::string_view tok, std::string_view whole) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0) {
    throw std::invalid_argument("invalid region '" + std::string(whole) + "'");
  }
  return v - 1;
}

} // namespace

Region Region::prefix(std::size_t p) {
  Region r;
  r.sites_.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    r.sites_[i] = i;
  }
  return r;
}

Region Region::from_sites(std::vector<std::size_t> sites) {
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  Region r;
  r.sites_ = std::move(sites);
  return r;
}

Region Region::parse(std::string_view text) {
  std::vector<std::size_t> sites;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      sites.push_back(parse_site(item, text));
    } else {
      const std::size_t lo = parse_site(item.substr(0, dash), text);
      const std::size_t hi = parse_site(item.substr(dash + 1), text);
      if (hi < lo) {
        throw std::invalid_argument("invalid region '" + std::string(text) + "'");
      }
      for (std::size_t s = lo; s <= hi; ++s) {
        sites.push_back(s);
      }
    }
    pos = end + 1;
  }
  if (sites.empty()) {
    throw std::invalid_argument("empty region");
  }
  return from_sites(std::move(sites));
}

Region Region::complement(std::size_t n_qubits) const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_qubits; ++i) {
    if (k < sites_.size() && sites_[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  Region r;
  r.sites_ = std::move(out);
  return r;
}

void Region::validate(std::size_t n_qubits) const {
  if (!sites_.empty() && sites_.back() >= n_qubits) {
    throw std::out_of_range("region site " + std::to_string(sites_.back() + 1) +
                            " out of range for " + std::to_string(n_qubits) + " qubits");
  }
}

std::string Region::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < sites_.size()) {
    std::size_t j = i;
    while (j + 1 < sites_.size() && sites_[j + 1] == sites_[j] + 1) {
      ++j;
    }
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(sites_[i] + 1);
    if (j > i) {
      out += '-' + std::to_string(sites_[j] + 1);
    }
    i = j + 1;
  }
  return out;
}

SuperStabilizerTableau::SuperStabilizerTableau(std::size_t n_qubits)
    : n_(n_qubits), x_(n_qubits, n_qubits), z_(n_qubits, n_qubits) {
  if (n_qubits == 0) {
    throw std::invalid_argument("tableau needs at least one qubit");
  }
}

SuperStabilizerTableau SuperStabilizerTableau::all_x(std::size_t n_qubits) {
  SuperStabilizerTableau t(n_qubits);
  for (std::size_t i = 0; i < n_qubits; ++i) {
    t.z_.set(i, i, true);
  }
  return t;
}

SuperStabilizerTableau
SuperStabilizerTableau::from_stabilizers(const std::vector<SuperPauli> &stabilizers) {
  const std::size_t n = stabilizers.size();
  SuperStabilizerTableau t(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (stabilizers[a].n_qubits() != n) {
      throw std::invalid_argument("stabilizer " + std::to_string(a + 1) + " has " +
                                  std::to_string(stabilizers[a].n_qubits()) +
                                  " sites, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      t.x_.set(i, a, stabilizers[a].x(i));
      t.z_.set(i, a, stabilizers[a].z(i));
    }
  }
  if (!t.independent()) {
    throw std::invalid_argument("stabilizers are linearly dependent");
  }
  if (!t.commuting()) {
    throw std::invalid_argument("stabilizers do not commute");
  }
  return t;
}

SuperPauli SuperStabilizerTableau::stabilizer(std::size_t alpha) const {
  if (alpha >= n_) {
    throw std::out_of_range("stabilizer index out of range");
  }
  SuperPauli p(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    p.set_x(i, x_.get(i, alpha));
    p.set_z(i, z_.get(i, alpha));
  }
  return p;
}

std::vector<SuperPauli> SuperStabilizerTableau::stabilizers() const {
  std::vector<SuperPauli> out;
  out.reserve(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    out.push_back(stabilizer(a));
  }
  return out;
}

void SuperStabilizerTableau::check_site(std::size_t site) const {
  if (site >= n_) {
    throw std::out_of_range("site " + std::to_string(site + 1) + " out of range for " +
                            std::to_string(n_) + " qubits");
  }
}

void SuperStabilizerTableau::apply_t(std::size_t site) {
  check_site(site);
  auto x = x_.row(site);
  auto z = z_.row(site);
  std::swap_ranges(x.begin(), x.end(), z.begin());
#ifndef NDEBUG
  check_invariants();
#endif
}

void SuperStabilizerTableau::apply_swap(std::size_t site_a, std::size_t site_b) {
  validate_gate(SwapGate{site_a, site_b}, n_);
  x_.swap_rows(site_a, site_b);
  z_.swap_rows(site_a, site_b);
#ifndef NDEBUG
  check_invariants();
#endif
}

void SuperStabilizerTableau::apply_c3(std::size_t control, std::size_t target_1,
                                      std::size_t target_2) {
  validate_gate(C3Gate{control, target_1, target_2}, n_);
  auto cx = x_.row(control);
  auto cz = z_.row(control);
  auto ax = x_.row(target_1);
  auto az = z_.row(target_1);
  auto bx = x_.row(target_2);
  auto bz = z_.row(target_2);
  for (std::size_t k = 0; k < cx.size(); ++k) {
    cz[k] ^= ax[k] ^ az[k] ^ bx[k] ^ bz[k];
    ax[k] ^= cx[k];
    az[k] ^= cx[k];
    bx[k] ^= cx[k];
    bz[k] ^= cx[k];
  }
#ifndef NDEBUG
  check_invariants();
#endif
}

void SuperStabilizerTableau::apply(const SuperGate &gate) {
  if (const auto *t = std::get_if<TGate>(&gate)) {
    apply_t(t->site);
  } else if (const auto *s = std::get_if<SwapGate>(&gate)) {
    apply_swap(s->site_a, s->site_b);
  } else {
    const auto &c = std::get<C3Gate>(gate);
    apply_c3(c.control, c.target_1, c.target_2);
  }
}

void SuperStabilizerTableau::apply_program(const OperatorProgram &program) {
  if (program.n_qubits() != n_) {
    throw std::invalid_argument("program is for " + std::to_string(program.n_qubits()) +
                                " qubits, tableau has " + std::to_string(n_));
  }
  for (const auto &g : program.gates()) {
    apply(g);
  }
}

bool SuperStabilizerTableau::commuting() const {
  // Row a of `product` accumulates the symplectic products of stabilizer a
  // with every stabilizer.
  BitMatrix product(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto x = x_.row(i);
    const auto z = z_.row(i);
    for_each_set_bit(x, [&](std::size_t a) { xor_into(product.row(a), z); });
    for_each_set_bit(z, [&](std::size_t a) { xor_into(product.row(a), x); });
  }
  return product == BitMatrix(n_, n_);
}

bool SuperStabilizerTableau::independent() const {
  BitMatrix v(2 * n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::ranges::copy(x_.row(i), v.row(2 * i).begin());
    std::ranges::copy(z_.row(i), v.row(2 * i + 1).begin());
  }
  return gf2_rank(std::move(v)) == n_;
}

void SuperStabilizerTableau::check_invariants() const {
  if (!independent()) {
    throw std::logic_error("super-stabilizers became linearly dependent");
  }
  if (!commuting()) {
    throw std::logic_error("super-stabilizers stopped commuting");
  }
}

std::size_t entropy(const SuperStabilizerTableau &tableau, const Region &region) {
  region.validate(tableau.n_qubits());
  BitMatrix rows(2 * region.size(), tableau.n_qubits());
  std::size_t r = 0;
  for (std::size_t site : region.sites()) {
    std::ranges::copy(tableau.x_plane().row(site), rows.row(r++).begin());
    std::ranges::copy(tableau.z_plane().row(site), rows.row(r++).begin());
  }
  return gf2_rank(std::move(rows)) - region.size();
}

std::string dump_stabilizers(const SuperStabilizerTableau &tableau) {
  std::string out;
  out.reserve(tableau.n_qubits() * (tableau.n_qubits() + 1));
  for (std::size_t a = 0; a < tableau.n_qubits(); ++a) {
    out += tableau.stabilizer(a).label();
    out += '\n';
  }
  return out;
}

SuperStabilizerTableau parse_stabilizers(std::string_view text) {
  if (text.empty() || text.back() != '\n') {
    throw std::invalid_argument("stabilizer dump must end with a newline");
  }
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    lines.emplace_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  const std::size_t n = lines.front().size();
  if (n == 0) {
    throw std::invalid_argument("empty stabilizer line 1");
  }
  std::vector<SuperPauli> stabilizers;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (lines[k].size() != n) {
      throw std::invalid_argument("stabilizer line " + std::to_string(k + 1) + " has length " +
                                  std::to_string(lines[k].size()) + ", expected " +
                                  std::to_string(n));
    }
    stabilizers.push_back(SuperPauli::from_label(lines[k]));
  }
  if (lines.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " stabilizer lines, got " +
                                std::to_string(lines.size()));
  }
  return SuperStabilizerTableau::from_stabilizers(stabilizers);
}

} // namespace superscrambler
