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

#include <random>
#include <set>

#include "superscrambler/core_model.hpp"
#include "superscrambler/experiments.hpp"
#include "superscrambler/program_text.hpp"
#include "superscrambler/tableau.hpp"
#include "support.hpp"

using namespace superscrambler;

TEST_CASE("xy string labels") {
  const auto s = XYStringIndex::from_label("XYY");
  CHECK(s.n_qubits == 3);
  CHECK(s.y_mask == 0b110);
  CHECK(s.label() == "XYY");
  CHECK_THROWS_AS(XYStringIndex::from_label("XZ"), std::invalid_argument);
  CHECK_THROWS_AS(XYStringIndex(2, 0b100), std::invalid_argument);
}

TEST_CASE("super pauli encoding") {
  const auto p = SuperPauli::from_label("IXZY");
  CHECK(p.label() == "IXZY");
  CHECK_FALSE(p.x(0));
  CHECK_FALSE(p.z(0));
  CHECK(p.x(1));
  CHECK(p.z(2));
  CHECK((p.x(3) && p.z(3)));

  // (v1x, v1z, v2x, v2z, ...)
  const auto v = p.interleaved();
  const std::vector<int> expected = {0, 0, 1, 0, 0, 1, 1, 1};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(v.get(k) == bool(expected[k]));
  }
  CHECK_THROWS_AS(SuperPauli::from_label("XQ"), std::invalid_argument);

  CHECK(SuperPauli::from_label("XI").commutes_with(SuperPauli::from_label("IZ")));
  CHECK_FALSE(SuperPauli::from_label("XI").commutes_with(SuperPauli::from_label("ZI")));
  CHECK(SuperPauli::from_label("XX").commutes_with(SuperPauli::from_label("ZZ")));
  CHECK(SuperPauli::from_label("YY").commutes_with(SuperPauli::from_label("XX")));
}

TEST_CASE("gate validation") {
  CHECK_NOTHROW(validate_gate(make_c3(0, 1, 2), 3));
  CHECK_THROWS_AS(validate_gate(make_c3(0, 1, 3), 3), std::out_of_range);
  CHECK_THROWS_AS(validate_gate(make_c3(0, 0, 2), 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_gate(make_swap(1, 1), 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_gate(make_t(3), 3), std::out_of_range);
  CHECK(make_c3(4, 3, 1) == SuperGate(C3Gate{4, 1, 3}));
  CHECK(to_string(make_c3(0, 2, 1)) == "C3 1 2 3");
}

TEST_CASE("reverse from state space order") {
  // The last state-space gate acts first on the operator.
  const auto p = reverse_from_state_space({make_t(0), make_c3(0, 1, 2)}, 3);
  REQUIRE(p.size() == 2);
  CHECK(p.gates()[0] == make_c3(0, 1, 2));
  CHECK(p.gates()[1] == make_t(0));

  CHECK(reverse_from_state_space({}, 3).empty());
  CHECK(reverse_from_state_space({make_swap(0, 1)}, 2).gates() ==
        std::vector<SuperGate>{make_swap(0, 1)});

  CHECK_THROWS_AS(reverse_from_state_space({make_t(5)}, 3), std::out_of_range);
  CHECK_THROWS_AS(reverse_from_state_space({make_swap(1, 1)}, 3), std::invalid_argument);
}

TEST_CASE("reversal is an involution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const auto p = testing::random_program(rng, n, trial);
    const auto once = reverse_from_state_space(p.gates(), n);
    CHECK(once.size() == p.size());
    CHECK(reverse_from_state_space(once.gates(), n) == p);
  }
}

TEST_CASE("conjugation rules for single super paulis") {
  // T: X -> Z, Z -> -X.
  CHECK(conjugate(SuperPauli::from_label("Z"), make_t(0)).label() == "X");
  CHECK(conjugate(SuperPauli::from_label("X"), make_t(0)).label() == "Z");
  CHECK(conjugate(SuperPauli::from_label("Y"), make_t(0)).label() == "Y");
  // C3 with control 1, targets 2 and 3.
  CHECK(conjugate(SuperPauli::from_label("IZI"), make_c3(0, 1, 2)).label() == "ZZI");
  CHECK(conjugate(SuperPauli::from_label("IIZ"), make_c3(0, 1, 2)).label() == "ZIZ");
  CHECK(conjugate(SuperPauli::from_label("IXI"), make_c3(0, 1, 2)).label() == "ZXI");
  CHECK(conjugate(SuperPauli::from_label("ZII"), make_c3(0, 1, 2)).label() == "ZII");
  CHECK(conjugate(SuperPauli::from_label("XII"), make_c3(0, 1, 2)).label() == "XYY");
  CHECK(conjugate(SuperPauli::from_label("XZI"), make_swap(0, 1)).label() == "ZXI");
}

TEST_CASE("C3 update is an involution on all 64 site patterns") {
  for (int bits = 0; bits < 64; ++bits) {
    SuperPauli p(3);
    for (std::size_t s = 0; s < 3; ++s) {
      p.set_x(s, (bits >> (2 * s)) & 1);
      p.set_z(s, (bits >> (2 * s + 1)) & 1);
    }
    const auto gate = make_c3(0, 1, 2);
    CHECK(conjugate(conjugate(p, gate), gate) == p);
  }
}

namespace {

SuperPauli conjugate_all(SuperPauli p, const std::vector<SuperGate> &gates) {
  for (const auto &g : gates) {
    p = conjugate(p, g);
  }
  return p;
}

} // namespace

TEST_CASE("localize_c3 already adjacent") {
  const auto seq = localize_c3(C3Gate{0, 1, 2}, 3);
  REQUIRE(seq.size() == 1);
  CHECK(seq[0] == make_c3(0, 1, 2));
}

TEST_CASE("localize_c3 structure and equivalence, exhaustive for N <= 8") {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (a == c || b == c) {
            continue;
          }
          const C3Gate gate{c, a, b};
          const auto seq = localize_c3(gate, n);

          std::size_t c3_count = 0;
          std::size_t c3_pos = 0;
          for (std::size_t k = 0; k < seq.size(); ++k) {
            if (const auto *g = std::get_if<C3Gate>(&seq[k])) {
              ++c3_count;
              c3_pos = k;
              const std::size_t lo = std::min({g->control, g->target_1, g->target_2});
              const std::size_t hi = std::max({g->control, g->target_1, g->target_2});
              CHECK(hi - lo == 2);
            } else {
              const auto &s = std::get<SwapGate>(seq[k]);
              CHECK(std::max(s.site_a, s.site_b) - std::min(s.site_a, s.site_b) == 1);
            }
          }
          REQUIRE(c3_count == 1);
          const std::size_t swaps = seq.size() - 1;
          CHECK(swaps % 2 == 0);
          CHECK(c3_pos == swaps / 2);
          for (std::size_t k = 0; k < swaps / 2; ++k) {
            CHECK(seq[k] == seq[seq.size() - 1 - k]);
          }
          const std::size_t dist = (c > a ? c - a : a - c) + (c > b ? c - b : b - c);
          CHECK(swaps <= 2 * dist);

          // Mask-level maps are linear, so agreeing on the 2N basis inputs
          // means they agree everywhere.
          for (std::size_t s = 0; s < n; ++s) {
            for (const auto &basis : {SuperPauli::single_x(n, s), SuperPauli::single_z(n, s)}) {
              CHECK(conjugate_all(basis, seq) == conjugate(basis, gate));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("localize_c3 matches direct C3 on random tableaus") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto direct = testing::random_tableau(rng, 5, 40);
    auto local = direct;
    direct.apply_c3(0, 2, 4);
    for (const auto &g : localize_c3(C3Gate{0, 2, 4}, 5)) {
      local.apply(g);
    }
    CHECK(direct == local);
  }
}

TEST_CASE("localized GHZ gate count grows as N^2") {
  for (std::size_t n : {3, 6, 12, 30, 60, 120}) {
    const auto p = build_ghz_program(n, true);
    CHECK(p.size() <= 6 * n * n);
  }
}

TEST_CASE("program text parsing") {
  const auto p = parse_program("# GHZ on three sites\nN 3\nT 1\nC3 1 3 2  # targets any order\n");
  CHECK(p.n_qubits() == 3);
  REQUIRE(p.size() == 2);
  CHECK(p.gates()[0] == make_t(0));
  CHECK(p.gates()[1] == make_c3(0, 1, 2));

  const auto rev = parse_program("@state-space-order\nN 3\nT 1\nSWAP 2 3\n");
  CHECK(rev.gates() == std::vector<SuperGate>{make_swap(1, 2), make_t(0)});

  CHECK(parse_program("N 4\n").empty());
  CHECK(parse_program("N 2\r\nSWAP 1 2\r\n").size() == 1);
}

TEST_CASE("program text errors carry line numbers") {
  auto message = [](std::string_view text) {
    try {
      parse_program(text);
    } catch (const ProgramParseError &e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("N 3\nC3 1 1 2\n") == "line 2: repeated index in C3");
  CHECK(message("T 1\n").find("line 1: gate before N header") == 0);
  CHECK(message("N 3\nT 4\n").find("line 2:") == 0);
  CHECK(message("N 3\nT 0\n") == "line 2: site indices are 1-based");
  CHECK(message("N 3\nH 1\n").find("unknown instruction") != std::string::npos);
  CHECK(message("N 3\nSWAP 1\n").find("takes 2") != std::string::npos);
  CHECK(message("N 3\nN 3\n").find("duplicate N") != std::string::npos);
  CHECK(message("N 3\n@state-space-order\n").find("first directive") != std::string::npos);
  CHECK(message("# nothing\n").find("missing N") != std::string::npos);
  CHECK(message("N x\n").find("positive integer") != std::string::npos);
}

TEST_CASE("program text round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testing::random_program(rng, 3 + trial % 10, 30);
    CHECK(parse_program(format_program(p)) == p);
  }
}
