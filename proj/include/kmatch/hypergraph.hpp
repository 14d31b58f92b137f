#pragma once

#include <cstddef>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "kmatch/big_count.hpp"
#include "kmatch/vertex_set.hpp"

namespace kmatch {

/// Range over all r-subsets of {0..n-1} in colexicographic order.
///
///   for (VertexSet s : RSubsets(5, 3)) { ... }
class RSubsets {
 public:
  /// Throws ParameterError unless 0 <= r <= n <= 128.
  RSubsets(int n, int r);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = VertexSet;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexSet*;
    using reference = const VertexSet&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class RSubsets;
    iterator(int n, int r);

    int n_ = 0;
    std::vector<int> indices_;
    VertexSet current_;
    bool done_ = true;
  };

  [[nodiscard]] iterator begin() const { return iterator(n_, r_); }
  [[nodiscard]] iterator end() const { return iterator(); }

 private:
  int n_;
  int r_;
};

/// All r-subsets of [n] in colex order, materialized.
std::vector<VertexSet> enumerate_r_subsets(int n, int r);

/// An r-uniform hypergraph on vertices 0..n-1 with its edges kept sorted in
/// colex order and free of duplicates.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Sorts and deduplicates `edges`. Throws ParameterError if n > 128, r is
  /// out of range, or any edge is not an r-subset of [n].
  Hypergraph(int n, int r, std::vector<VertexSet> edges);

  /// Like the constructor but throws FormatError on a duplicate edge.
  static Hypergraph from_edges_strict(int n, int r, std::vector<VertexSet> edges);

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] int uniformity() const { return r_; }
  [[nodiscard]] std::size_t size() const { return edges_.size(); }
  [[nodiscard]] bool empty() const { return edges_.empty(); }
  [[nodiscard]] std::span<const VertexSet> edges() const { return edges_; }
  [[nodiscard]] const VertexSet& edge(std::size_t idx) const { return edges_[idx]; }

  [[nodiscard]] bool contains(const VertexSet& edge) const;
  /// Position of `edge` in colex order, or size() when absent.
  [[nodiscard]] std::size_t index_of(const VertexSet& edge) const;

  /// Re-sorts and deduplicates; a no-op on any constructed hypergraph.
  [[nodiscard]] Hypergraph canonical() const { return Hypergraph(n_, r_, edges_); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<VertexSet> edges_;
};

/// Number of edges containing `t`.
std::size_t degree(const Hypergraph& h, const VertexSet& t);

/// A k-set of maximum degree, ties broken towards the colex-least k-set.
/// Only k-subsets of edges are candidates. Throws ArgumentError when h has
/// no edges, ParameterError unless 1 <= k <= r.
std::pair<VertexSet, std::size_t> max_degree_kset(const Hypergraph& h, int k);

/// {E \ T : T ⊆ E ∈ h}, as an (r-|T|)-uniform hypergraph on the same vertices.
Hypergraph link(const Hypergraph& h, const VertexSet& t);

/// {E ∈ h : T ⊄ E}.
Hypergraph deletion(const Hypergraph& h, const VertexSet& t);

}  // namespace kmatch
