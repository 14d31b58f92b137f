#pragma once

#include <algorithm>
#include <vector>

#include "kmatch/hypergraph.hpp"
#include "kmatch/rng.hpp"
#include "oracles.hpp"

namespace test_support {

inline oracle::Mask to_mask(const kmatch::VertexSet& s) {
  oracle::Mask m = 0;
  s.for_each([&](int v) { m |= oracle::Mask{1} << v; });
  return m;
}

inline std::vector<oracle::Mask> masks(const kmatch::Hypergraph& h) {
  std::vector<oracle::Mask> out;
  for (const auto& e : h.edges()) out.push_back(to_mask(e));
  return out;
}

inline kmatch::VertexSet from_mask(oracle::Mask m) {
  kmatch::VertexSet s;
  for (int v = 0; v < 32; ++v) {
    if (m >> v & 1U) s.insert(v);
  }
  return s;
}

/// `count` distinct r-subsets of [n] drawn uniformly (capped at C(n, r)).
inline kmatch::Hypergraph random_hypergraph(kmatch::CounterRng& rng, int n, int r, std::size_t count) {
  std::vector<oracle::Mask> pool = oracle::r_subsets(n, r);
  count = std::min(count, pool.size());
  for (std::size_t t = 0; t < count; ++t) {
    std::swap(pool[t], pool[t + rng.below(pool.size() - t)]);
  }
  std::vector<kmatch::VertexSet> edges;
  for (std::size_t t = 0; t < count; ++t) edges.push_back(from_mask(pool[t]));
  return kmatch::Hypergraph(n, r, std::move(edges));
}

inline kmatch::Hypergraph from_lists(int n, int r, std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<kmatch::VertexSet> edges;
  for (auto l : lists) edges.emplace_back(l);
  return kmatch::Hypergraph(n, r, std::move(edges));
}

}  // namespace test_support
