#include "kmatch/matching.hpp"

#include "kmatch/detail/clique.hpp"
#include "kmatch/errors.hpp"

namespace kmatch {

namespace {

void check_k(const Hypergraph& h, int k) {
  if (k < 1 || k > h.uniformity()) throw ParameterError("k must satisfy 1 <= k <= r");
}

MatchingWitness to_witness(const Hypergraph& h, int k, const std::vector<std::size_t>& nodes) {
  MatchingWitness w{k, {}};
  for (std::size_t v : nodes) w.edges.push_back(h.edge(v));
  return w;
}

}  // namespace

bool is_k_matching(const Hypergraph& h, const std::vector<VertexSet>& m, int k) {
  for (const VertexSet& e : m) {
    if (!h.contains(e)) throw ArgumentError("matching member is not an edge of the hypergraph");
  }
  for (std::size_t q = 1; q < m.size(); ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      if (m[p].intersection_size(m[q]) >= k) return false;
    }
  }
  return true;
}

NuResult nu_k(const Hypergraph& h, int k, const SearchOptions& options) {
  check_k(h, k);
  if (k == h.uniformity()) {
    // Distinct r-sets share at most r-1 vertices.
    MatchingWitness all{k, {h.edges().begin(), h.edges().end()}};
    return {h.size(), std::move(all)};
  }
  const detail::CompatibilityGraph graph(h.edges(), k);
  const auto nodes = detail::find_clique(graph, detail::DynBitset::full(h.size()),
                                         {std::nullopt, options.budget, options.threads});
  return {nodes.size(), to_witness(h, k, nodes)};
}

std::optional<MatchingWitness> has_k_matching_of_size(const Hypergraph& h, int k, std::size_t size,
                                                      const SearchOptions& options) {
  check_k(h, k);
  if (size == 0) return MatchingWitness{k, {}};
  if (size > h.size()) return std::nullopt;
  const detail::CompatibilityGraph graph(h.edges(), k);
  const auto nodes = detail::find_clique(graph, detail::DynBitset::full(h.size()),
                                         {size, options.budget, options.threads});
  if (nodes.size() < size) return std::nullopt;
  return to_witness(h, k, nodes);
}

MatchingWitness greedy_maximal_k_matching(const Hypergraph& h, int k) {
  check_k(h, k);
  MatchingWitness w{k, {}};
  for (const VertexSet& e : h.edges()) {
    bool fits = true;
    for (const VertexSet& kept : w.edges) {
      if (kept.intersection_size(e) >= k) {
        fits = false;
        break;
      }
    }
    if (fits) w.edges.push_back(e);
  }
  return w;
}

}  // namespace kmatch
