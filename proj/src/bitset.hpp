#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace semitrans::detail {

// Fixed-width bitset sized at runtime.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int size) : words_((size + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  // Index of the lowest set bit at or after `from`, or -1.
  int next(int from) const {
    auto wi = static_cast<std::size_t>(from >> 6);
    if (wi >= words_.size()) return -1;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    for (;;) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // this &= ~o
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace semitrans::detail
