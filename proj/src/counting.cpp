#include "kmatch/counting.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "kmatch/errors.hpp"

namespace kmatch {

namespace {

void check_g_params(int n, int r, int k, int a) {
  if (a < 2) throw ParameterError("g needs a >= 2");
  if (k < 1 || k > r || r > n) throw ParameterError("g needs 1 <= k <= r <= n");
  if (static_cast<std::int64_t>(a - 1) * k > n) {
    throw ParameterError("g needs room for a-1 disjoint k-sets: (a-1)k <= n");
  }
}

}  // namespace

BigCount g_count(int n, int r, int k, int a) {
  check_g_params(n, r, k, a);
  const int terms = std::min(a - 1, r / k);
  BigCount total = 0;
  for (int j = 1; j <= terms; ++j) {
    BigCount term = binomial(a - 1, j) * binomial(n - j * k, r - j * k);
    if (j % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigCount count_cover_oracle(int n, int r, int k, int i, const KSetFamily& family) {
  if (family.vertex_count() != n) throw ParameterError("block family lives on a different vertex count");
  if (r < 0 || r > n) throw ParameterError("oracle needs 0 <= r <= n");
  if (binomial(n, r) > kMaxMaterializedEdges) {
    throw ResourceError("oracle enumeration budget exceeded: C(" + std::to_string(n) + "," +
                        std::to_string(r) + ") > 10^7");
  }
  std::uint64_t count = 0;
  for (const VertexSet& e : RSubsets(n, r)) {
    if (meets_some_block(e, family, k + i)) ++count;
  }
  return count;
}

bool g_recurrence_check(int n, int r, int k, int a) {
  if (a < 3) throw ParameterError("recurrence check needs a >= 3");
  check_g_params(n, r, k, a);
  return g_count(n, r, k, a) - binomial(n - k, r - k) == g_count(n, r, k, a - 1);
}

BigCount family_size(const Hypergraph& h) { return BigCount(h.size()); }

BigCount b_family_size(int n, int r, int k, int i) {
  if (k < 1 || k > r || r > n) throw ParameterError("B-family needs 1 <= k <= r <= n");
  if (i < 0 || 2 * i > n - k) throw ParameterError("B-family needs 0 <= i <= (n-k)/2");
  const int block = k + 2 * i;
  BigCount total = 0;
  for (int t = std::max(k + i, r - n + block); t <= std::min(r, block); ++t) {
    total += binomial(block, t) * binomial(n - block, r - t);
  }
  return total;
}

BigCount frankl_family_size(const Params& p) {
  p.validate_frankl();
  const int block = p.block_size();
  const int threshold = p.k + p.i;
  // Coefficients of prod_j (sum_{t<threshold} C(block,t) x^t) * (1+x)^(rest), truncated at x^r.
  std::vector<BigCount> poly(static_cast<std::size_t>(p.r) + 1, 0);
  poly[0] = 1;
  auto multiply = [&](const std::vector<BigCount>& factor) {
    std::vector<BigCount> next(poly.size(), 0);
    for (std::size_t u = 0; u < poly.size(); ++u) {
      if (poly[u] == 0) continue;
      for (std::size_t v = 0; v < factor.size() && u + v < next.size(); ++v) {
        next[u + v] += poly[u] * factor[v];
      }
    }
    poly = std::move(next);
  };
  std::vector<BigCount> avoid;
  for (int t = 0; t < std::min(threshold, block + 1); ++t) avoid.push_back(binomial(block, t));
  for (int j = 0; j < p.a - 1; ++j) multiply(avoid);
  const int rest = p.n - block * (p.a - 1);
  std::vector<BigCount> free_part;
  for (int t = 0; t <= std::min(rest, p.r); ++t) free_part.push_back(binomial(rest, t));
  multiply(free_part);
  return binomial(p.n, p.r) - poly[static_cast<std::size_t>(p.r)];
}

}  // namespace kmatch
