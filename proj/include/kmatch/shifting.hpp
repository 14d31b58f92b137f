#pragma once

#include <cstdint>

#include "kmatch/hypergraph.hpp"

namespace kmatch {

/// `up` replaces the smaller label i by the larger j (i < j); `down` is the
/// usual left compression, replacing j by i.
enum class ShiftDirection { up, down };

/// The (i,j)-shift: each edge E with source ∈ E, target ∉ E moves to
/// E - source + target unless that set is already an edge. Requires
/// 0 <= i < j < n; throws ArgumentError otherwise.
Hypergraph shift(const Hypergraph& h, int i, int j, ShiftDirection direction = ShiftDirection::up);

/// Fixed by every (i,j)-shift.
bool is_stable(const Hypergraph& h, ShiftDirection direction = ShiftDirection::up);

struct StabilizeResult {
  Hypergraph hypergraph;
  /// (i,j) applications that changed the hypergraph.
  std::uint64_t effective_shifts = 0;
};

/// Applies shifts in row-major (i ascending, then j ascending) sweeps until a
/// whole sweep changes nothing. Each effective shift moves the total label sum
/// strictly in one direction, so at most n*r*|E| of them can happen; the cap
/// is enforced.
StabilizeResult stabilize(const Hypergraph& h, ShiftDirection direction = ShiftDirection::up);

}  // namespace kmatch
