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

#ifndef SUPERSCRAMBLER_TESTS_SUPPORT_HPP
#define SUPERSCRAMBLER_TESTS_SUPPORT_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "superscrambler/core_model.hpp"
#include "superscrambler/tableau.hpp"

namespace superscrambler::testing {

inline SuperGate random_gate(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> site(0, n - 1);
  std::uniform_int_distribution<int> kind(0, n >= 3 ? 2 : (n == 2 ? 1 : 0));
  switch (kind(rng)) {
  case 0:
    return make_t(site(rng));
  case 1: {
    const std::size_t a = site(rng);
    std::size_t b = site(rng);
    while (b == a) {
      b = site(rng);
    }
    return make_swap(a, b);
  }
  default: {
    const std::size_t c = site(rng);
    std::size_t a = site(rng);
    while (a == c) {
      a = site(rng);
    }
    std::size_t b = site(rng);
    while (b == c || b == a) {
      b = site(rng);
    }
    return make_c3(c, a, b);
  }
  }
}

inline OperatorProgram random_program(std::mt19937_64 &rng, std::size_t n, std::size_t length) {
  OperatorProgram p(n);
  for (std::size_t k = 0; k < length; ++k) {
    p.push_back(random_gate(rng, n));
  }
  return p;
}

inline SuperStabilizerTableau random_tableau(std::mt19937_64 &rng, std::size_t n,
                                             std::size_t length) {
  auto t = SuperStabilizerTableau::all_x(n);
  t.apply_program(random_program(rng, n, length));
  return t;
}

/// Per-bit Gaussian elimination on unpacked rows.
inline std::size_t naive_rank(std::vector<std::vector<int>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) {
      ++p;
    }
    if (p == m.size()) {
      continue;
    }
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) {
          m[r][k] ^= m[rank][k];
        }
      }
    }
    ++rank;
  }
  return rank;
}

} // namespace superscrambler::testing

#endif // SUPERSCRAMBLER_TESTS_SUPPORT_HPP
