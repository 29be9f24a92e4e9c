#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliquerich {

/**
 * Dynamically sized bitset over 64-bit words. Sized once at construction;
 * the census inner loops live on intersect/for_each, so those stay branch-lean.
 */
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= word_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(word_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  /// this &= ~other
  Bitset& and_not(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  /// Clears all bits at positions <= i.
  void keep_above(int i) {
    if (i < 0) return;
    std::size_t w = static_cast<std::size_t>(i) >> 6;
    for (std::size_t j = 0; j < w && j < words_.size(); ++j) words_[j] = 0;
    if (w < words_.size()) {
      int b = i & 63;
      if (b == 63)
        words_[w] = 0;
      else
        words_[w] &= ~((word_t{1} << (b + 1)) - 1);
    }
  }

  /// Index of the lowest set bit, or -1 when empty.
  int find_first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_t bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

private:
  using word_t = std::uint64_t;
  int nbits_ = 0;
  std::vector<word_t> words_;
};

} // namespace cliquerich
