#ifndef DERGRAPH_BITMATRIX_HPP
#define DERGRAPH_BITMATRIX_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "dergraph/bitkernels.hpp"

namespace dergraph {

using kern::Word;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for_bits(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline void set_bit(Word* a, std::size_t i) { a[i / kWordBits] |= Word(1) << (i % kWordBits); }
inline void clear_bit(Word* a, std::size_t i) { a[i / kWordBits] &= ~(Word(1) << (i % kWordBits)); }
inline bool test_bit(const Word* a, std::size_t i) {
  return (a[i / kWordBits] >> (i % kWordBits)) & 1;
}

// First set bit at position >= from, or -1.
inline long next_set_bit(const Word* a, std::size_t nwords, std::size_t from) {
  std::size_t w = from / kWordBits;
  if (w >= nwords) return -1;
  Word cur = a[w] & (~Word(0) << (from % kWordBits));
  while (true) {
    if (cur) return static_cast<long>(w * kWordBits + std::countr_zero(cur));
    if (++w >= nwords) return -1;
    cur = a[w];
  }
}

template <typename F>
inline void for_each_bit(const Word* a, std::size_t nwords, F&& f) {
  for (std::size_t w = 0; w < nwords; ++w) {
    Word cur = a[w];
    while (cur) {
      f(w * kWordBits + std::countr_zero(cur));
      cur &= cur - 1;
    }
  }
}

// Dense square/rectangular bit matrix with one packed row per vertex.
// Rows are handed to the kernel layer for the set-arithmetic inner loops.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t bits)
      : rows_(rows), bits_(bits), wpr_(words_for_bits(bits)), data_(rows * wpr_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t bits() const { return bits_; }
  std::size_t words_per_row() const { return wpr_; }

  Word* row(std::size_t r) { return data_.data() + r * wpr_; }
  const Word* row(std::size_t r) const { return data_.data() + r * wpr_; }

  bool get(std::size_t r, std::size_t c) const { return test_bit(row(r), c); }
  void set(std::size_t r, std::size_t c) { set_bit(row(r), c); }
  void clear(std::size_t r, std::size_t c) { clear_bit(row(r), c); }

  std::size_t row_count(std::size_t r) const { return kern::active_ops().count(row(r), wpr_); }

  bool operator==(const BitMatrix& o) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t bits_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> data_;
};

// Scratch bitset of a fixed word width, as used for solver candidate sets.
class BitRow {
public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), w_(words_for_bits(bits), 0) {}

  std::size_t bits() const { return bits_; }
  std::size_t words() const { return w_.size(); }
  Word* data() { return w_.data(); }
  const Word* data() const { return w_.data(); }

  void set(std::size_t i) { set_bit(w_.data(), i); }
  void clear(std::size_t i) { clear_bit(w_.data(), i); }
  bool test(std::size_t i) const { return test_bit(w_.data(), i); }
  void fill_first(std::size_t n) { // set bits [0, n)
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] = 0;
    std::size_t full = n / kWordBits;
    for (std::size_t i = 0; i < full; ++i) w_[i] = ~Word(0);
    if (n % kWordBits) w_[full] = (Word(1) << (n % kWordBits)) - 1;
  }
  std::size_t count() const { return kern::active_ops().count(w_.data(), w_.size()); }
  bool empty() const {
    for (Word x : w_)
      if (x) return false;
    return true;
  }

  bool operator==(const BitRow&) const = default;

private:
  std::size_t bits_ = 0;
  std::vector<Word> w_;
};

} // namespace dergraph

#endif
