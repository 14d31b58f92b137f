#pragma once

#include <vector>

#include "kmatch/hypergraph.hpp"
#include "kmatch/params.hpp"

namespace kmatch {

/// Families refuse to materialize past this many edges; larger counts come
/// from the closed forms in counting.hpp.
inline constexpr std::uint64_t kMaxMaterializedEdges = 10'000'000;

/// An ordered, nonempty list of distinct, equal-sized blocks T_1, ..., T_m
/// inside [n].
class KSetFamily {
 public:
  KSetFamily() = default;
  /// Throws ParameterError on an empty list, unequal sizes, duplicates or
  /// vertices outside [n].
  KSetFamily(int n, std::vector<VertexSet> sets);

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] int block_size() const { return block_size_; }
  [[nodiscard]] std::size_t size() const { return sets_.size(); }
  [[nodiscard]] const std::vector<VertexSet>& sets() const { return sets_; }
  [[nodiscard]] const VertexSet& operator[](std::size_t idx) const { return sets_[idx]; }

  [[nodiscard]] VertexSet support() const;
  [[nodiscard]] bool pairwise_disjoint() const;

  /// Copy with block `idx` replaced; the replacement must keep the invariants.
  [[nodiscard]] KSetFamily with_block(std::size_t idx, const VertexSet& block) const;

  friend bool operator==(const KSetFamily&, const KSetFamily&) = default;

 private:
  int n_ = 0;
  int block_size_ = 0;
  std::vector<VertexSet> sets_;
};

/// True when |e ∩ T_j| >= threshold for some block.
bool meets_some_block(const VertexSet& e, const KSetFamily& family, int threshold);

/// All r-subsets E of [n] with |E ∩ T_j| >= k+i for some j; the blocks must
/// have size k+2i.
Hypergraph generalized_family(int n, int r, int k, int i, const KSetFamily& family);

/// The canonical disjoint placement T_j = {(j-1)(k+2i), ..., j(k+2i)-1},
/// j = 1..a-1.
KSetFamily canonical_blocks(const Params& p);

/// generalized_family over canonical_blocks(p).
Hypergraph frankl_family(const Params& p);

/// All r-subsets meeting the block [k+2i] in at least k+i vertices.
Hypergraph ekr_b_family(int n, int r, int k, int i);

/// Every r-subset of the lowest n0 = ra - (a-1)(k-1) - 1 vertices of [n].
Hypergraph h0_family(const Params& p);

Hypergraph complete_hypergraph(int n, int r);

}  // namespace kmatch
