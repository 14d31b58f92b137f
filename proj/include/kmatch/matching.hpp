#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kmatch/hypergraph.hpp"

namespace kmatch {

/// A set of edges whose pairwise intersections have at most k-1 vertices.
struct MatchingWitness {
  int k = 1;
  std::vector<VertexSet> edges;  // colex order

  [[nodiscard]] std::size_t size() const { return edges.size(); }
  friend bool operator==(const MatchingWitness&, const MatchingWitness&) = default;
};

struct SearchOptions {
  /// Branch nodes before the search gives up with ResourceError.
  std::uint64_t budget = 100'000'000;
  /// Worker threads; 0 uses every hardware thread. Results do not depend on it.
  unsigned threads = 0;
};

/// True when every k-set lies in at most one member of `m`, i.e. all
/// pairwise intersections have size <= k-1. Throws ArgumentError if some
/// member is not an edge of `h`.
bool is_k_matching(const Hypergraph& h, const std::vector<VertexSet>& m, int k);

struct NuResult {
  std::size_t nu = 0;
  MatchingWitness witness;
};

/// The k-matching number with a witness. Among maximum k-matchings the
/// witness is the least one when edge lists are compared lexicographically
/// in colex order. Throws ResourceError (carrying the best size found) when
/// the budget runs out.
NuResult nu_k(const Hypergraph& h, int k, const SearchOptions& options = {});

/// A k-matching of exactly `size` edges (the lexicographically least one),
/// or nullopt when none exists. Throws ResourceError if the budget runs out
/// before the question is settled.
std::optional<MatchingWitness> has_k_matching_of_size(const Hypergraph& h, int k, std::size_t size,
                                                      const SearchOptions& options = {});

/// Scans edges in colex order, keeping each one compatible with those kept.
MatchingWitness greedy_maximal_k_matching(const Hypergraph& h, int k);

}  // namespace kmatch
