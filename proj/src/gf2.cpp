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

#include "superscrambler/gf2.hpp"

#include <algorithm>

namespace superscrambler {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, true);
  }
  return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

std::size_t gf2_rank(BitMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t stride = m.words_per_row();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows; ++col) {
    const std::size_t word = col / kWordBits;
    const Word bit = Word{1} << (col % kWordBits);

    std::size_t pivot = rank;
    while (pivot < rows && !(m.row(pivot)[word] & bit)) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    m.swap_rows(pivot, rank);

    // Columns left of `word` are already cleared below the pivot row. The
    // masked XOR avoids a data-dependent branch on random bits.
    const std::size_t shift = col % kWordBits;
    const auto pivot_tail = m.row(rank).subspan(word, stride - word);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      auto tail = m.row(r).subspan(word, stride - word);
      const Word mask = Word{0} - ((tail[0] >> shift) & 1U);
      for (std::size_t k = 0; k < tail.size(); ++k) {
        tail[k] ^= pivot_tail[k] & mask;
      }
    }
    ++rank;
  }
  return rank;
}

} // namespace superscrambler
