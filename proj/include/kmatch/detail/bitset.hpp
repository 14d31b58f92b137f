#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kmatch::detail {

/// Growable bit set over node indices of a search graph.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static DynBitset full(std::size_t bits) {
    DynBitset b(bits);
    for (std::size_t v = 0; v < bits; ++v) b.set(v);
    return b;
  }

  [[nodiscard]] std::size_t bit_size() const { return bits_; }
  [[nodiscard]] std::size_t word_count() const { return words_.size(); }

  void set(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  [[nodiscard]] bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool none() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  [[nodiscard]] bool intersects(const DynBitset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & o.words_[w]) != 0) return true;
    }
    return false;
  }
  [[nodiscard]] bool is_subset_of(const DynBitset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    }
    return true;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  DynBitset& subtract(const DynBitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  /// Clears every bit at or below `v`.
  void clear_through(std::size_t v) {
    const std::size_t top = v >> 6;
    for (std::size_t w = 0; w < top; ++w) words_[w] = 0;
    const unsigned shift = static_cast<unsigned>(v & 63);
    words_[top] &= (shift == 63) ? 0 : ~((std::uint64_t{2} << shift) - 1);
  }

  /// Lowest set bit, or bit_size() when empty.
  [[nodiscard]] std::size_t first() const { return next_from(0); }
  /// Lowest set bit at or above `from`, or bit_size().
  [[nodiscard]] std::size_t next_from(std::size_t from) const {
    if (from >= bits_) return bits_;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      if (++w == words_.size()) return bits_;
      word = words_[w];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        fn((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const DynBitset&, const DynBitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace kmatch::detail
