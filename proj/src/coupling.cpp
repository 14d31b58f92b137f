#include "kmatch/coupling.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "kmatch/errors.hpp"
#include "kmatch/counting.hpp"
#include "kmatch/rng.hpp"

namespace kmatch {

bool captures(const VertexSet& set, const KSetFamily& family, int k, int i) {
  return meets_some_block(set, family, k + i);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs(const KSetFamily& family) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t q = 1; q < family.size(); ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      if (family[p].intersects(family[q])) pairs.emplace_back(p, q);
    }
  }
  return pairs;
}

}  // namespace

std::optional<CouplingContext> disjointify_step(const KSetFamily& family, const PlacementMode& mode) {
  const auto pairs = overlapping_pairs(family);
  if (pairs.empty()) return std::nullopt;

  CounterRng rng(mode.seed, mode.stream);
  auto [p, q] = pairs.front();
  if (mode.randomized) {
    std::tie(p, q) = pairs[rng.below(pairs.size())];
    if (rng.below(2) == 1) std::swap(p, q);
  }
  const VertexSet overlap = family[p] & family[q];
  const VertexSet support = family.support();

  std::vector<int> free_vertices;
  for (int v = 0; v < family.vertex_count(); ++v) {
    if (!support.contains(v)) free_vertices.push_back(v);
  }
  const auto s = static_cast<std::size_t>(overlap.size());
  if (free_vertices.size() < s) {
    throw ParameterError("disjointify: only " + std::to_string(free_vertices.size()) +
                         " vertices avoid every block but the overlap has " + std::to_string(s));
  }
  if (mode.randomized) {
    // Partial Fisher-Yates picks s free vertices in random order.
    for (std::size_t t = 0; t < s; ++t) {
      const std::size_t pick = t + rng.below(free_vertices.size() - t);
      std::swap(free_vertices[t], free_vertices[pick]);
    }
  }
  free_vertices.resize(s);

  CouplingContext ctx;
  ctx.family = family;
  ctx.modified = p;
  ctx.partner = q;
  ctx.overlap = overlap;
  ctx.replacement = VertexSet::from_vector(free_vertices);
  const std::vector<int> sources = overlap.elements();
  std::vector<int> targets = free_vertices;
  if (!mode.randomized) std::sort(targets.begin(), targets.end());
  for (std::size_t t = 0; t < s; ++t) ctx.phi.emplace_back(sources[t], targets[t]);
  ctx.star_family = family.with_block(p, (family[p] - overlap) | ctx.replacement);
  return ctx;
}

VertexSet coupling_map(const VertexSet& set, const CouplingContext& ctx) {
  VertexSet out = set - (ctx.overlap | ctx.replacement);
  for (const auto& [s, r] : ctx.phi) {
    if (set.contains(s)) out.insert(r);
    if (set.contains(r)) out.insert(s);
  }
  return out;
}

CouplingReport verify_coupling(const KSetFamily& family, int r, int k, int i, const PlacementMode& mode) {
  const int n = family.vertex_count();
  if (family.block_size() != k + 2 * i) throw ParameterError("blocks must have size k+2i");
  if (r < 0 || r > n) throw ParameterError("coupling needs 0 <= r <= n");
  if (binomial(n, r) > kMaxMaterializedEdges) {
    throw ResourceError("coupling enumeration exceeds 10^7 r-sets");
  }
  CouplingReport report;
  const auto ctx = disjointify_step(family, mode);
  if (!ctx) {
    report.already_disjoint = true;
    report.size_family = count_cover_oracle(n, r, k, i, family);
    report.count_both = report.size_family;
    report.size_star = report.size_family;
    return report;
  }
  std::uint64_t a1 = 0;
  std::uint64_t a2 = 0;
  std::uint64_t both = 0;
  std::vector<VertexSet> images;
  for (const VertexSet& set : RSubsets(n, r)) {
    const bool in_family = captures(set, ctx->family, k, i);
    const bool in_star = captures(set, ctx->star_family, k, i);
    if (in_family && in_star) {
      ++both;
    } else if (in_family) {
      ++a1;
      const VertexSet image = coupling_map(set, *ctx);
      images.push_back(image);
      if (!(captures(image, ctx->star_family, k, i) && !captures(image, ctx->family, k, i))) {
        report.images_in_a2 = false;
      }
    } else if (in_star) {
      ++a2;
    }
  }
  std::sort(images.begin(), images.end());
  report.injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  report.count_a1 = a1;
  report.count_a2 = a2;
  report.count_both = both;
  report.size_family = both + a1;
  report.size_star = both + a2;
  return report;
}

bool DisjointifyResult::monotone() const {
  return std::is_sorted(trace.begin(), trace.end());
}

DisjointifyResult disjointify(const KSetFamily& family, int r, int k, int i, const PlacementMode& mode) {
  const int n = family.vertex_count();
  if (family.block_size() != k + 2 * i) throw ParameterError("blocks must have size k+2i");
  if (static_cast<std::int64_t>(family.block_size()) * static_cast<std::int64_t>(family.size()) > n) {
    throw ParameterError("disjointify needs (k+2i)|T| <= n");
  }
  DisjointifyResult result{family, {count_cover_oracle(n, r, k, i, family)}, {}};
  PlacementMode step_mode = mode;
  while (true) {
    auto ctx = disjointify_step(result.family, step_mode);
    if (!ctx) break;
    result.family = ctx->star_family;
    result.trace.push_back(count_cover_oracle(n, r, k, i, result.family));
    result.steps.push_back(std::move(*ctx));
    ++step_mode.stream;
  }
  return result;
}

}  // namespace kmatch
