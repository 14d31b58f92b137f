#include "kmatch/constructions.hpp"

#include <algorithm>
#include <string>

#include "kmatch/errors.hpp"

namespace kmatch {

KSetFamily::KSetFamily(int n, std::vector<VertexSet> sets) : n_(n), sets_(std::move(sets)) {
  if (n_ < 0 || n_ > VertexSet::kCapacity) throw ParameterError("block family: n outside [0, 128]");
  if (sets_.empty()) throw ParameterError("block family must be nonempty");
  block_size_ = sets_.front().size();
  for (const VertexSet& s : sets_) {
    if (s.size() != block_size_) throw ParameterError("block family: blocks differ in size");
    if (s.max() >= n_) throw ParameterError("block family: vertex outside [0, n)");
  }
  std::vector<VertexSet> sorted = sets_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParameterError("block family: duplicate block");
  }
}

VertexSet KSetFamily::support() const {
  VertexSet u;
  for (const VertexSet& s : sets_) u |= s;
  return u;
}

bool KSetFamily::pairwise_disjoint() const {
  for (std::size_t q = 1; q < sets_.size(); ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      if (sets_[p].intersects(sets_[q])) return false;
    }
  }
  return true;
}

KSetFamily KSetFamily::with_block(std::size_t idx, const VertexSet& block) const {
  std::vector<VertexSet> sets = sets_;
  sets.at(idx) = block;
  return KSetFamily(n_, std::move(sets));
}

bool meets_some_block(const VertexSet& e, const KSetFamily& family, int threshold) {
  return std::any_of(family.sets().begin(), family.sets().end(),
                     [&](const VertexSet& t) { return e.intersection_size(t) >= threshold; });
}

namespace {

void require_materializable(int n, int r) {
  if (binomial(n, r) > kMaxMaterializedEdges) {
    throw ResourceError("refusing to enumerate C(" + std::to_string(n) + "," + std::to_string(r) +
                        ") r-sets; use the counting formulas instead");
  }
}

}  // namespace

Hypergraph generalized_family(int n, int r, int k, int i, const KSetFamily& family) {
  if (k < 1 || i < 0) throw ParameterError("generalized family needs k >= 1 and i >= 0");
  if (family.vertex_count() != n) throw ParameterError("block family lives on a different vertex count");
  if (family.block_size() != k + 2 * i) {
    throw ParameterError("blocks must have size k+2i = " + std::to_string(k + 2 * i));
  }
  if (k + i > r) throw ParameterError("generalized family needs k+i <= r");
  if (r > n) throw ParameterError("generalized family needs r <= n");
  require_materializable(n, r);
  std::vector<VertexSet> edges;
  for (const VertexSet& e : RSubsets(n, r)) {
    if (meets_some_block(e, family, k + i)) edges.push_back(e);
  }
  return Hypergraph(n, r, std::move(edges));
}

KSetFamily canonical_blocks(const Params& p) {
  p.validate_frankl();
  const int size = p.block_size();
  std::vector<VertexSet> blocks;
  for (int j = 0; j < p.a - 1; ++j) blocks.push_back(VertexSet::range(j * size, size));
  return KSetFamily(p.n, std::move(blocks));
}

Hypergraph frankl_family(const Params& p) {
  return generalized_family(p.n, p.r, p.k, p.i, canonical_blocks(p));
}

Hypergraph ekr_b_family(int n, int r, int k, int i) {
  if (k < 1 || k > r || r > n) throw ParameterError("B-family needs 1 <= k <= r <= n");
  if (i < 0 || 2 * i > n - k) throw ParameterError("B-family needs 0 <= i <= (n-k)/2");
  return generalized_family(n, r, k, i, KSetFamily(n, {VertexSet::prefix(k + 2 * i)}));
}

Hypergraph h0_family(const Params& p) {
  p.validate();
  if (p.a < 1) throw ParameterError("h0 needs a >= 1");
  if (static_cast<std::int64_t>(p.r) < static_cast<std::int64_t>(p.a - 1) * (p.k - 1) + 1) {
    throw ParameterError("h0 is only defined when r >= (a-1)(k-1)+1");
  }
  const std::int64_t n0 = p.n0();
  if (n0 > p.n) throw ParameterError("h0 needs n >= n0 = " + std::to_string(n0));
  const int base = static_cast<int>(n0);
  if (base < p.r) return Hypergraph(p.n, p.r, {});
  require_materializable(base, p.r);
  return Hypergraph(p.n, p.r, enumerate_r_subsets(base, p.r));
}

Hypergraph complete_hypergraph(int n, int r) {
  require_materializable(n, r);
  return Hypergraph(n, r, enumerate_r_subsets(n, r));
}

}  // namespace kmatch
