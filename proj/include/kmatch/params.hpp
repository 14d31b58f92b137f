#pragma once

#include <cstdint>

namespace kmatch {

/// The tuple (n, r, k, a, i) shared by every construction and count.
struct Params {
  int n = 0;
  int r = 0;
  int k = 0;
  int a = 1;
  int i = 0;

  /// Checks 1 <= k <= r <= n <= 128, a >= 1, i >= 0.
  void validate() const;

  /// Additionally requires a >= 2 and that a-1 pairwise disjoint blocks of
  /// size k+2i fit into [n].
  void validate_frankl() const;

  /// r*a - (a-1)(k-1) - 1: the vertex count of the clique-type candidate.
  [[nodiscard]] std::int64_t n0() const;

  /// Largest admissible block parameter, floor((floor(n/(a-1)) - k)/2).
  /// Negative when no i is admissible. Requires a >= 2.
  [[nodiscard]] int max_block_parameter() const;

  [[nodiscard]] int block_size() const { return k + 2 * i; }

  friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace kmatch
