#include "kmatch/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kmatch/errors.hpp"

namespace kmatch {

RSubsets::RSubsets(int n, int r) : n_(n), r_(r) {
  if (n < 0 || n > VertexSet::kCapacity) {
    throw ParameterError("subset enumeration: n = " + std::to_string(n) +
                         " exceeds the 128-vertex capacity");
  }
  if (r < 0 || r > n) throw ParameterError("subset enumeration needs 0 <= r <= n");
}

RSubsets::iterator::iterator(int n, int r) : n_(n), indices_(static_cast<std::size_t>(r)), done_(false) {
  std::iota(indices_.begin(), indices_.end(), 0);
  current_ = VertexSet::prefix(r);
}

RSubsets::iterator& RSubsets::iterator::operator++() {
  // Colex successor: bump the lowest index that has room, reset the ones below it.
  const std::size_t r = indices_.size();
  std::size_t j = 0;
  while (j < r) {
    const int limit = (j + 1 < r) ? indices_[j + 1] : n_;
    if (indices_[j] + 1 < limit) break;
    ++j;
  }
  if (j == r) {
    done_ = true;
    return *this;
  }
  current_.erase(indices_[j]);
  ++indices_[j];
  current_.insert(indices_[j]);
  for (std::size_t t = 0; t < j; ++t) {
    current_.erase(indices_[t]);
    indices_[t] = static_cast<int>(t);
  }
  for (std::size_t t = 0; t < j; ++t) current_.insert(static_cast<int>(t));
  return *this;
}

std::vector<VertexSet> enumerate_r_subsets(int n, int r) {
  RSubsets range(n, r);
  std::vector<VertexSet> out;
  for (const VertexSet& s : range) out.push_back(s);
  return out;
}

namespace {

void check_edges(int n, int r, const std::vector<VertexSet>& edges) {
  if (n < 0 || n > VertexSet::kCapacity) {
    throw ParameterError("hypergraph: n = " + std::to_string(n) + " exceeds the 128-vertex capacity");
  }
  if (r < 0 || r > n) throw ParameterError("hypergraph: uniformity must lie in [0, n]");
  for (const VertexSet& e : edges) {
    if (e.size() != r) throw ParameterError("hypergraph: edge is not " + std::to_string(r) + "-uniform");
    if (e.max() >= n) throw ParameterError("hypergraph: edge vertex outside [0, n)");
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  check_edges(n_, r_, edges_);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph Hypergraph::from_edges_strict(int n, int r, std::vector<VertexSet> edges) {
  const std::size_t before = edges.size();
  Hypergraph h(n, r, std::move(edges));
  if (h.size() != before) throw FormatError("hypergraph: duplicate edge");
  return h;
}

bool Hypergraph::contains(const VertexSet& edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), edge);
}

std::size_t Hypergraph::index_of(const VertexSet& edge) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it == edges_.end() || *it != edge) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t degree(const Hypergraph& h, const VertexSet& t) {
  return static_cast<std::size_t>(std::count_if(
      h.edges().begin(), h.edges().end(), [&](const VertexSet& e) { return t.is_subset_of(e); }));
}

std::pair<VertexSet, std::size_t> max_degree_kset(const Hypergraph& h, int k) {
  if (k < 1 || k > h.uniformity()) throw ParameterError("max_degree_kset needs 1 <= k <= r");
  if (h.empty()) throw ArgumentError("max_degree_kset: hypergraph has no edges, so no k-set lies in an edge");
  // Every k-subset of an edge is a candidate; k-sets outside all edges have degree 0.
  std::vector<VertexSet> candidates;
  for (const VertexSet& e : h.edges()) {
    const std::vector<int> verts = e.elements();
    RSubsets pick(static_cast<int>(verts.size()), k);
    for (const VertexSet& sel : pick) {
      VertexSet t;
      sel.for_each([&](int pos) { t.insert(verts[static_cast<std::size_t>(pos)]); });
      candidates.push_back(t);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  VertexSet best;
  std::size_t best_count = 0;
  std::size_t idx = 0;
  // Sorted candidates repeat once per containing edge, so run lengths are degrees.
  while (idx < candidates.size()) {
    std::size_t end = idx;
    while (end < candidates.size() && candidates[end] == candidates[idx]) ++end;
    if (end - idx > best_count) {
      best_count = end - idx;
      best = candidates[idx];
    }
    idx = end;
  }
  return {best, best_count};
}

Hypergraph link(const Hypergraph& h, const VertexSet& t) {
  const int tsize = t.size();
  if (tsize > h.uniformity()) throw ParameterError("link: |T| exceeds the uniformity");
  std::vector<VertexSet> out;
  for (const VertexSet& e : h.edges()) {
    if (t.is_subset_of(e)) out.push_back(e - t);
  }
  return Hypergraph(h.vertex_count(), h.uniformity() - tsize, std::move(out));
}

Hypergraph deletion(const Hypergraph& h, const VertexSet& t) {
  std::vector<VertexSet> out;
  for (const VertexSet& e : h.edges()) {
    if (!t.is_subset_of(e)) out.push_back(e);
  }
  return Hypergraph(h.vertex_count(), h.uniformity(), std::move(out));
}

}  // namespace kmatch
