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

#ifndef SUPERSCRAMBLER_GF2_HPP
#define SUPERSCRAMBLER_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace superscrambler {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Word-level kernels shared by the bit containers and the tableau.
inline void xor_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t k = 0; k < dst.size(); ++k) {
    dst[k] ^= src[k];
  }
}

inline bool odd_overlap(std::span<const Word> a, std::span<const Word> b) {
  Word acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    acc ^= a[k] & b[k];
  }
  return std::popcount(acc) & 1;
}

/// Fixed-length bit string packed into 64-bit words. Padding bits beyond
/// size() are always zero.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t n_bits)
      : n_bits_(n_bits), words_(words_for(n_bits), 0) {}

  std::size_t size() const { return n_bits_; }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool v) {
    const Word bit = Word{1} << (i % kWordBits);
    if (v) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (Word w : words_) {
      n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
  }
  bool any() const { return popcount() != 0; }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  BitVector &operator^=(const BitVector &other) {
    xor_into(words_, other.words_);
    return *this;
  }

  bool operator==(const BitVector &) const = default;

private:
  std::size_t n_bits_ = 0;
  std::vector<Word> words_;
};

/// Dense GF(2) matrix, row-major, each row padded to whole words.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)),
        data_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    Word &w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = v ? (w | bit) : (w & ~bit);
  }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }

  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const BitMatrix &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Rank over GF(2). Eliminates on the argument, so pass a copy to keep the
/// original.
std::size_t gf2_rank(BitMatrix m);

} // namespace superscrambler

#endif // SUPERSCRAMBLER_GF2_HPP
