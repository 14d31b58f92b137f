#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kmatch/detail/bitset.hpp"
#include "kmatch/vertex_set.hpp"

namespace kmatch::detail {

/// Nodes are sets; two nodes are adjacent when the sets share at most k-1
/// vertices, so cliques are exactly k-matchings.
class CompatibilityGraph {
 public:
  CompatibilityGraph(std::span<const VertexSet> sets, int k);

  [[nodiscard]] std::size_t size() const { return adj_.size(); }
  [[nodiscard]] const DynBitset& neighbours(std::size_t v) const { return adj_[v]; }
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }

 private:
  std::vector<DynBitset> adj_;
};

struct CliqueQuery {
  /// Unset: find a maximum clique. Set: stop at the first clique of this size.
  std::optional<std::size_t> target;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

/// Branch and bound over cliques inside `candidates`, branching on nodes in
/// ascending index order with a greedy-colouring bound. The returned clique
/// (ascending indices) is the lexicographically least among those of the
/// optimal (or target) size, whatever the thread count. An empty result in
/// target mode means no clique of that size exists. Throws ResourceError,
/// carrying the best size seen, once more than `budget` nodes are expanded.
std::vector<std::size_t> find_clique(const CompatibilityGraph& graph, const DynBitset& candidates,
                                     const CliqueQuery& query);

}  // namespace kmatch::detail
