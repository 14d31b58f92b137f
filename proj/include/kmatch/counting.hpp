#pragma once

#include "kmatch/big_count.hpp"
#include "kmatch/constructions.hpp"
#include "kmatch/hypergraph.hpp"
#include "kmatch/params.hpp"

namespace kmatch {

/// Number of r-subsets of [n] containing at least one of a-1 pairwise
/// disjoint k-sets, by inclusion-exclusion:
///   sum_{j=1}^{min(a-1, floor(r/k))} (-1)^{j-1} C(a-1, j) C(n-jk, r-jk).
/// Requires a >= 2, 1 <= k <= r <= n and n >= (a-1)k.
BigCount g_count(int n, int r, int k, int a);

/// Brute-force count of r-subsets meeting some block in >= k+i vertices.
/// Throws ResourceError when C(n, r) exceeds 10^7.
BigCount count_cover_oracle(int n, int r, int k, int i, const KSetFamily& family);

/// Exact check of g(n,r,k,a) - C(n-k, r-k) == g(n,r,k,a-1). Requires a >= 3.
/// Holds exactly when r < 2k; for r >= 2k the left side is smaller.
bool g_recurrence_check(int n, int r, int k, int a);

BigCount family_size(const Hypergraph& h);

/// |B_i| = sum_t C(k+2i, t) C(n-k-2i, r-t) over k+i <= t <= min(r, k+2i).
BigCount b_family_size(int n, int r, int k, int i);

/// |F_i| for the (n,r,k,a,i)-Frankl family without materializing it: the
/// complement counts r-sets meeting every one of the a-1 disjoint blocks in
/// fewer than k+i vertices, a coefficient of a polynomial product.
BigCount frankl_family_size(const Params& p);

}  // namespace kmatch
