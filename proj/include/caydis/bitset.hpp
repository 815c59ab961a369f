#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace caydis {

/** Fixed-size bitset sized at runtime. Used for adjacency rows and member sets. */
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool intersects(const Bitset& other) const {
    std::size_t k = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < k; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  /** First set bit at position >= from, or size() if none. */
  int next_set(int from) const {
    if (from >= bits_) return bits_;
    int w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t(0) << (from & 63));
    while (true) {
      if (cur) return (w << 6) + std::countr_zero(cur);
      if (++w >= static_cast<int>(words_.size())) return bits_;
      cur = words_[w];
    }
  }

  bool operator==(const Bitset&) const = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace caydis
