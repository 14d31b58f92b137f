#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kmatch/big_count.hpp"
#include "kmatch/constructions.hpp"

namespace kmatch {

/// One disjointification step: blocks T1 = family[modified] and
/// T2 = family[partner] overlap in S; T1 is replaced by (T1 \ S) ∪ R, where R
/// is a set of |S| vertices outside every block, and phi pairs S with R.
struct CouplingContext {
  KSetFamily family;
  KSetFamily star_family;
  std::size_t modified = 0;
  std::size_t partner = 0;
  VertexSet overlap;      // S
  VertexSet replacement;  // R
  std::vector<std::pair<int, int>> phi;  // (s, phi(s)), s ascending
};

/// How a step picks the overlapping pair, R and phi.
struct PlacementMode {
  /// false: first overlapping pair (q ascending, then p < q ascending) with
  /// T1 = T_p, R = the |S| lowest free vertices, phi order-preserving.
  /// true: pair, roles, R and phi drawn from CounterRng(seed).
  bool randomized = false;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// |I ∩ T_j| >= k+i for some block.
bool captures(const VertexSet& set, const KSetFamily& family, int k, int i);

/// nullopt when the family is already pairwise disjoint. Throws
/// ParameterError when fewer than |S| vertices of [n] avoid every block.
std::optional<CouplingContext> disjointify_step(const KSetFamily& family,
                                                const PlacementMode& mode = {});

/// J_I: swaps I ∩ S through phi into R and I ∩ R back through phi^-1.
VertexSet coupling_map(const VertexSet& set, const CouplingContext& ctx);

struct CouplingReport {
  /// Captures the family but not the starred family.
  BigCount count_a1;
  /// Captures the starred family but not the family.
  BigCount count_a2;
  BigCount count_both;
  /// coupling_map is one-to-one on A1.
  bool injective = true;
  /// coupling_map sends every A1 outcome into A2.
  bool images_in_a2 = true;
  BigCount size_family;  // |H(T)|
  BigCount size_star;    // |H(T*)|
  /// The family was already disjoint, so T* = T and A1 = A2 = ∅.
  bool already_disjoint = false;

  /// Every inequality the coupling argument promises.
  [[nodiscard]] bool consistent() const {
    return injective && images_in_a2 && count_a1 <= count_a2 && size_family <= size_star &&
           size_family == count_both + count_a1 && size_star == count_both + count_a2;
  }
};

/// Enumerates every r-subset of [n] and classifies it against one
/// disjointification step. Throws ResourceError when C(n, r) > 10^7.
CouplingReport verify_coupling(const KSetFamily& family, int r, int k, int i,
                               const PlacementMode& mode = {});

struct DisjointifyResult {
  KSetFamily family;
  /// |H(T)| before the first step and after each step.
  std::vector<BigCount> trace;
  std::vector<CouplingContext> steps;

  [[nodiscard]] bool monotone() const;
};

/// Repeats disjointify_step until the blocks are pairwise disjoint.
/// Requires (k+2i) * |family| <= n.
DisjointifyResult disjointify(const KSetFamily& family, int r, int k, int i,
                              const PlacementMode& mode = {});

}  // namespace kmatch
