#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace qlay::detail {

/// Fixed-size bitset sized at runtime; backs the transitive-closure rows.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : size_(n), blocks_((n + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const {
    return (blocks_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) { blocks_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { blocks_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  void or_with(const Bits& other) {
    for (std::size_t b = 0; b < blocks_.size(); b++) blocks_[b] |= other.blocks_[b];
  }

  bool intersects(const Bits& other) const {
    for (std::size_t b = 0; b < blocks_.size(); b++) {
      if (blocks_[b] & other.blocks_[b]) return true;
    }
    return false;
  }

  int count() const {
    int total = 0;
    for (std::uint64_t block : blocks_) total += std::popcount(block);
    return total;
  }

  bool operator==(const Bits& other) const = default;

  /// Calls f(i) for every set bit, in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < blocks_.size(); b++) {
      std::uint64_t word = blocks_[b];
      while (word) {
        int i = static_cast<int>(b << 6) + std::countr_zero(word);
        f(i);
        word &= word - 1;
      }
    }
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace qlay::detail
