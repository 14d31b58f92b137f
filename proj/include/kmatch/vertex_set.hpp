#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace kmatch {

/// Fixed-capacity set of vertices 0..127, stored as two 64-bit words.
///
/// Ordering is colexicographic: comparing the characteristic vectors as
/// 128-bit unsigned integers puts A before B exactly when the largest element
/// of the symmetric difference lies in B.
class VertexSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// The set {0, ..., count-1}.
  static VertexSet prefix(int count);
  /// The set {first, ..., first+count-1}.
  static VertexSet range(int first, int count);
  static VertexSet from_vector(const std::vector<int>& vertices);

  void insert(int v) { words_[word(v)] |= bit(v); }
  void erase(int v) { words_[word(v)] &= ~bit(v); }
  [[nodiscard]] bool contains(int v) const { return (words_[word(v)] & bit(v)) != 0; }

  [[nodiscard]] int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  [[nodiscard]] bool empty() const { return (words_[0] | words_[1]) == 0; }

  /// Largest element, or -1 for the empty set.
  [[nodiscard]] int max() const;
  /// Smallest element, or -1 for the empty set.
  [[nodiscard]] int min() const;

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
    return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
  }
  [[nodiscard]] int intersection_size(const VertexSet& other) const {
    return std::popcount(words_[0] & other.words_[0]) +
           std::popcount(words_[1] & other.words_[1]);
  }
  [[nodiscard]] bool intersects(const VertexSet& other) const {
    return ((words_[0] & other.words_[0]) | (words_[1] & other.words_[1])) != 0;
  }

  VertexSet& operator&=(const VertexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

  /// Elements in ascending order.
  [[nodiscard]] std::vector<int> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  [[nodiscard]] std::size_t hash() const {
    return std::hash<std::uint64_t>{}(words_[0] ^ (words_[1] * 0x9e3779b97f4a7c15ULL));
  }

 private:
  static constexpr std::size_t word(int v) { return static_cast<std::size_t>(v) >> 6; }
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, 2> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace kmatch
