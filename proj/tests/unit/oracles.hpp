#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// library: subsets are plain bitmasks (numeric order == colex order), and
// every count is a direct enumeration.

#include <bit>
#include <cstdint>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;

/// Pascal's triangle in 64-bit arithmetic, exact for n <= 60.
inline std::uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n) + 1);
  for (int row = 0; row <= n; ++row) {
    t[row].assign(static_cast<std::size_t>(row) + 1, 1);
    for (int c = 1; c < row; ++c) t[row][c] = t[row - 1][c - 1] + t[row - 1][c];
  }
  return t[n][k];
}

/// Every r-subset of [n] (n <= 24) as a bitmask, ascending.
inline std::vector<Mask> r_subsets(int n, int r) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (std::popcount(m) == r) out.push_back(m);
  }
  return out;
}

inline int meet(Mask a, Mask b) { return std::popcount(a & b); }

/// Number of r-subsets meeting some block in >= threshold vertices.
inline std::uint64_t cover_count(int n, int r, const std::vector<Mask>& blocks, int threshold) {
  std::uint64_t c = 0;
  for (Mask e : r_subsets(n, r)) {
    for (Mask b : blocks) {
      if (meet(e, b) >= threshold) {
        ++c;
        break;
      }
    }
  }
  return c;
}

/// Maximum k-matching by checking every subset of the edge list (<= 20 edges).
/// valid[s] = valid[s without its lowest edge] && that edge fits the rest.
inline int max_k_matching(const std::vector<Mask>& edges, int k) {
  const std::size_t m = edges.size();
  std::vector<std::uint32_t> compat(m, 0);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      if (u != v && meet(edges[u], edges[v]) <= k - 1) compat[u] |= 1U << v;
    }
  }
  std::vector<char> valid(std::size_t{1} << m, 0);
  valid[0] = 1;
  int best = 0;
  for (std::uint32_t s = 1; s < (1U << m); ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    valid[s] = valid[rest] && (rest & ~compat[static_cast<std::size_t>(low)]) == 0;
    if (valid[s]) best = std::max(best, std::popcount(s));
  }
  return best;
}

/// Largest family of r-subsets of [n] with no k-matching of size a, by
/// checking every family (only for universes of <= 20 sets).
inline int max_family_without_matching(int n, int r, int k, int a) {
  const std::vector<Mask> universe = r_subsets(n, r);
  const std::size_t m = universe.size();
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    if (std::popcount(s) <= best) continue;
    std::vector<Mask> fam;
    for (std::size_t t = 0; t < m; ++t) {
      if (s >> t & 1U) fam.push_back(universe[t]);
    }
    if (max_k_matching(fam, k) < a) best = std::popcount(s);
  }
  return best;
}

}  // namespace oracle
