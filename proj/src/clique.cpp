#include "kmatch/detail/clique.hpp"

#include <atomic>
#include <limits>
#include <string>

#include "kmatch/detail/parallel.hpp"
#include "kmatch/errors.hpp"

namespace kmatch::detail {

CompatibilityGraph::CompatibilityGraph(std::span<const VertexSet> sets, int k) {
  const std::size_t m = sets.size();
  adj_.assign(m, DynBitset(m));
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (sets[u].intersection_size(sets[v]) <= k - 1) {
        adj_[u].set(v);
        adj_[v].set(u);
      }
    }
  }
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Shared {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> best_size{0};
  std::atomic<bool> exhausted{false};
  // Target mode: smallest root that reached the target so far.
  std::atomic<std::size_t> first_hit{kNone};
};

/// Colour classes are independent sets of the compatibility graph, so the
/// number of classes used by a suffix bounds any clique inside that suffix.
/// bounds[idx] covers order[idx..].
void colour_bounds(const CompatibilityGraph& g, const std::vector<std::size_t>& order,
                   std::vector<std::size_t>& bounds, std::vector<DynBitset>& classes) {
  bounds.assign(order.size() + 1, 0);
  std::size_t used = 0;
  for (std::size_t idx = order.size(); idx-- > 0;) {
    const std::size_t v = order[idx];
    std::size_t c = 0;
    while (c < used && classes[c].intersects(g.neighbours(v))) ++c;
    if (c == used) {
      if (classes.size() == used) classes.emplace_back(g.size());
      else classes[used] = DynBitset(g.size());
      ++used;
    }
    classes[c].set(v);
    bounds[idx] = std::max(bounds[idx + 1], c + 1);
  }
}

class RootSearch {
 public:
  RootSearch(const CompatibilityGraph& g, Shared& shared, std::optional<std::size_t> target,
             std::size_t root, std::size_t position)
      : g_(g), shared_(shared), target_(target), root_(root), position_(position) {}

  void run(const DynBitset& candidates) {
    DynBitset pool = candidates;
    pool &= g_.neighbours(root_);
    pool.clear_through(root_);
    current_.push_back(root_);
    expand(pool);
  }

  [[nodiscard]] const std::vector<std::size_t>& best() const { return best_; }
  [[nodiscard]] bool hit() const { return hit_; }

 private:
  bool should_stop() const {
    if (shared_.exhausted.load(std::memory_order_relaxed)) return true;
    return target_ && shared_.first_hit.load(std::memory_order_relaxed) < position_;
  }

  void record() {
    if (current_.size() > best_.size()) {
      best_ = current_;
      std::size_t seen = shared_.best_size.load();
      while (seen < best_.size() && !shared_.best_size.compare_exchange_weak(seen, best_.size())) {
      }
    }
    if (target_ && current_.size() >= *target_) hit_ = true;
  }

  void expand(const DynBitset& pool) {
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.budget) {
      shared_.exhausted = true;
      return;
    }
    record();
    if (hit_ || should_stop()) return;

    std::vector<std::size_t> order;
    pool.for_each([&](std::size_t v) { order.push_back(v); });
    if (order.empty()) return;
    std::vector<std::size_t> bounds;
    colour_bounds(g_, order, bounds, classes_);

    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      const std::size_t reach = current_.size() + bounds[idx];
      if (target_) {
        if (reach < *target_) break;
      } else if (reach <= best_.size() || reach < shared_.best_size.load(std::memory_order_relaxed)) {
        break;
      }
      const std::size_t v = order[idx];
      DynBitset next = pool;
      next &= g_.neighbours(v);
      next.clear_through(v);
      current_.push_back(v);
      expand(next);
      current_.pop_back();
      if (hit_ || should_stop()) return;
    }
  }

  const CompatibilityGraph& g_;
  Shared& shared_;
  std::optional<std::size_t> target_;
  std::size_t root_;
  std::size_t position_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::vector<DynBitset> classes_;
  bool hit_ = false;
};

}  // namespace

std::vector<std::size_t> find_clique(const CompatibilityGraph& graph, const DynBitset& candidates,
                                     const CliqueQuery& query) {
  if (query.target && *query.target == 0) return {};
  std::vector<std::size_t> roots;
  candidates.for_each([&](std::size_t v) { roots.push_back(v); });
  if (roots.empty()) return {};

  Shared shared;
  shared.budget = query.budget;
  std::vector<std::size_t> root_bounds;
  std::vector<DynBitset> classes;
  colour_bounds(graph, roots, root_bounds, classes);

  std::vector<std::vector<std::size_t>> results(roots.size());
  std::vector<char> hits(roots.size(), 0);

  parallel_for(roots.size(), query.threads, [&](std::size_t idx) {
    if (shared.exhausted.load()) return;
    if (query.target) {
      if (root_bounds[idx] < *query.target || shared.first_hit.load() < idx) return;
    } else if (root_bounds[idx] < shared.best_size.load()) {
      return;
    }
    RootSearch search(graph, shared, query.target, roots[idx], idx);
    search.run(candidates);
    results[idx] = search.best();
    if (search.hit()) {
      hits[idx] = 1;
      std::size_t seen = shared.first_hit.load();
      while (idx < seen && !shared.first_hit.compare_exchange_weak(seen, idx)) {
      }
    }
  });

  if (shared.exhausted.load()) {
    throw ResourceError("clique search exceeded its node budget of " + std::to_string(query.budget),
                        shared.best_size.load());
  }

  if (query.target) {
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
      if (hits[idx]) return results[idx];
    }
    return {};
  }
  std::size_t winner = 0;
  for (std::size_t idx = 1; idx < roots.size(); ++idx) {
    if (results[idx].size() > results[winner].size()) winner = idx;
  }
  return results[winner];
}

}  // namespace kmatch::detail
