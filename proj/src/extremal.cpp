#include "kmatch/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>

#include "kmatch/constructions.hpp"
#include "kmatch/counting.hpp"
#include "kmatch/detail/clique.hpp"
#include "kmatch/detail/parallel.hpp"

namespace kmatch {

using detail::DynBitset;

namespace {

constexpr int kSplitDepth = 6;

struct SearchNode {
  DynBitset chosen;
  DynBitset addable;
  std::size_t size = 0;
};

/// Outer branch and bound over r-set inclusion. Universe positions are the
/// processing order; a family is grown by deciding the lowest addable
/// position, including first.
class ExtremalSearch {
 public:
  ExtremalSearch(const Params& p, const ExtremalOptions& options)
      : p_(p), options_(options), universe_(enumerate_r_subsets(p.n, p.r)) {
    if (options.stable_only) std::reverse(universe_.begin(), universe_.end());
    graph_.emplace(universe_, p.k);
    if (options.stable_only) build_up_shifts();
  }

  ExtremalResult run() {
    const std::size_t m = universe_.size();
    SearchNode root{DynBitset(m), DynBitset::full(m), 0};
    prune_unstable(root);
    std::vector<SearchNode> tasks;
    split(root, 0, tasks);

    std::vector<SearchNode> best(tasks.size());
    detail::parallel_for(tasks.size(), options_.threads, [&](std::size_t t) {
      if (exhausted_.load()) return;
      TaskState state{tasks[t], tasks[t].size};
      descend(tasks[t], state);
      best[t] = std::move(state.best);
    });

    std::size_t winner = 0;
    for (std::size_t t = 1; t < tasks.size(); ++t) {
      if (best[t].size > best[winner].size) winner = t;
    }
    Hypergraph witness = to_hypergraph(best[winner].chosen);
    if (exhausted_.load()) {
      throw ExtremalSearchIncomplete(
          "extremal search exceeded its node budget of " + std::to_string(options_.budget) +
              "; best family found is not proven optimal",
          std::move(witness));
    }
    return {best[winner].size, std::move(witness)};
  }

 private:
  struct TaskState {
    SearchNode best;
    std::size_t best_size;
  };

  void build_up_shifts() {
    const std::size_t m = universe_.size();
    ups_.assign(m, DynBitset(m));
    for (std::size_t e = 0; e < m; ++e) {
      const VertexSet& set = universe_[e];
      for (int i = 0; i < p_.n; ++i) {
        if (!set.contains(i)) continue;
        for (int j = i + 1; j < p_.n; ++j) {
          if (set.contains(j)) continue;
          VertexSet moved = set;
          moved.erase(i);
          moved.insert(j);
          // Descending colex order: the shifted set sits at a lower position.
          const auto it = std::lower_bound(universe_.begin(), universe_.end(), moved, std::greater<>());
          ups_[e].set(static_cast<std::size_t>(it - universe_.begin()));
        }
      }
    }
  }

  /// Stable mode: a set can only join if all its up-shifts are chosen or
  /// still addable. Up-shifts sit at lower positions, so one ascending pass
  /// reaches the fixed point.
  void prune_unstable(SearchNode& node) const {
    if (!options_.stable_only) return;
    DynBitset reachable = node.chosen;
    reachable |= node.addable;
    node.addable.for_each([&](std::size_t u) {
      if (!ups_[u].is_subset_of(reachable)) {
        node.addable.reset(u);
        reachable.reset(u);
      }
    });
  }

  bool completes_matching(const DynBitset& chosen, std::size_t u, std::size_t e) const {
    // chosen+e and chosen+u are each free of a-matchings; a new one must use both.
    DynBitset pool = chosen;
    pool &= graph_->neighbours(u);
    pool &= graph_->neighbours(e);
    const auto need = static_cast<std::size_t>(p_.a - 2);
    if (need == 0) return true;
    if (pool.count() < need) return false;
    const auto clique = detail::find_clique(*graph_, pool, {need, ~std::uint64_t{0}, 1});
    return clique.size() >= need;
  }

  SearchNode include(const SearchNode& node, std::size_t e) const {
    SearchNode next{node.chosen, node.addable, node.size + 1};
    next.addable.reset(e);
    DynBitset affected = next.addable;
    affected &= graph_->neighbours(e);
    affected.for_each([&](std::size_t u) {
      if (completes_matching(node.chosen, u, e)) next.addable.reset(u);
    });
    next.chosen.set(e);
    prune_unstable(next);
    return next;
  }

  SearchNode exclude(const SearchNode& node, std::size_t e) const {
    SearchNode next = node;
    next.addable.reset(e);
    prune_unstable(next);
    return next;
  }

  bool eligible(const SearchNode& node, std::size_t e) const {
    return !options_.stable_only || ups_[e].is_subset_of(node.chosen);
  }

  void split(const SearchNode& node, int depth, std::vector<SearchNode>& tasks) const {
    const std::size_t e = node.addable.first();
    if (depth == kSplitDepth || e == node.addable.bit_size()) {
      tasks.push_back(node);
      return;
    }
    if (eligible(node, e)) split(include(node, e), depth + 1, tasks);
    split(exclude(node, e), depth + 1, tasks);
  }

  void descend(const SearchNode& node, TaskState& state) {
    if (exhausted_.load(std::memory_order_relaxed)) return;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= options_.budget) {
      exhausted_ = true;
      return;
    }
    if (node.size > state.best_size) {
      state.best = node;
      state.best_size = node.size;
      std::size_t seen = global_best_.load();
      while (seen < node.size && !global_best_.compare_exchange_weak(seen, node.size)) {
      }
    }
    const std::size_t reach = node.size + node.addable.count();
    if (reach <= state.best_size || reach < global_best_.load(std::memory_order_relaxed)) return;
    const std::size_t e = node.addable.first();
    if (e == node.addable.bit_size()) return;
    if (eligible(node, e)) descend(include(node, e), state);
    descend(exclude(node, e), state);
  }

  Hypergraph to_hypergraph(const DynBitset& chosen) const {
    std::vector<VertexSet> edges;
    chosen.for_each([&](std::size_t v) { edges.push_back(universe_[v]); });
    return Hypergraph(p_.n, p_.r, std::move(edges));
  }

  Params p_;
  ExtremalOptions options_;
  std::vector<VertexSet> universe_;
  std::optional<detail::CompatibilityGraph> graph_;
  std::vector<DynBitset> ups_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::size_t> global_best_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace

ExtremalResult extremal_number(const Params& p, const ExtremalOptions& options) {
  p.validate();
  if (p.a == 1) return {0, Hypergraph(p.n, p.r, {})};
  const BigCount universe = binomial(p.n, p.r);
  if (universe > options.universe_limit) {
    throw ResourceError("r-set universe C(" + std::to_string(p.n) + "," + std::to_string(p.r) +
                        ") = " + to_string(universe) + " exceeds the limit of " +
                        std::to_string(options.universe_limit));
  }
  ExtremalSearch search(p, options);
  ExtremalResult result = search.run();
  if (has_k_matching_of_size(result.witness, p.k, static_cast<std::size_t>(p.a),
                             {options.candidate_budget, 1})) {
    throw std::logic_error("extremal witness contains a k-matching of size a");
  }
  return result;
}

std::string to_string(Agreement agreement) {
  switch (agreement) {
    case Agreement::match:
      return "match";
    case Agreement::mismatch:
      return "mismatch";
    case Agreement::exact_unavailable:
      return "exact-unavailable";
  }
  return "exact-unavailable";
}

namespace {

void solve_candidate(CandidateValue& candidate, const Hypergraph& family, const Params& p,
                     const ExtremalOptions& options) {
  try {
    candidate.nu = nu_k(family, p.k, {options.candidate_budget, options.threads}).nu;
    candidate.feasible = *candidate.nu < static_cast<std::uint64_t>(p.a);
  } catch (const ResourceError&) {
    // Fall back to the decision question, which is all feasibility needs.
    try {
      const auto hit = has_k_matching_of_size(family, p.k, static_cast<std::size_t>(p.a),
                                              {options.candidate_budget, options.threads});
      candidate.feasible = !hit.has_value();
    } catch (const ResourceError&) {
    }
  }
}

}  // namespace

ConjectureReport conjecture_value(const Params& p, const ExtremalOptions& options) {
  p.validate();
  if (p.a < 2) throw ParameterError("conjecture candidates need a >= 2");
  if (p.k >= p.r) throw ParameterError("conjecture candidates need k < r");

  ConjectureReport report;
  report.params = p;
  report.params.i = 0;
  report.hypotheses_hold = static_cast<std::int64_t>(p.n) >= static_cast<std::int64_t>(p.r) * p.a;

  CandidateValue h0{"h0", true, 0, std::nullopt, std::nullopt};
  const std::int64_t n0 = p.n0();
  if (static_cast<std::int64_t>(p.r) < static_cast<std::int64_t>(p.a - 1) * (p.k - 1) + 1 || n0 > p.n) {
    h0.applicable = false;
  } else {
    h0.size = binomial(n0, p.r);
    if (h0.size <= options.candidate_edge_limit) solve_candidate(h0, h0_family(p), p, options);
  }
  report.candidates.push_back(std::move(h0));

  for (int i = 0; i <= p.max_block_parameter(); ++i) {
    Params q = p;
    q.i = i;
    CandidateValue frankl{"frankl_" + std::to_string(i), true, frankl_family_size(q), std::nullopt,
                          std::nullopt};
    if (p.k + i > p.r) {
      // No r-set can meet a block in k+i > r vertices.
      frankl.nu = 0;
      frankl.feasible = true;
    } else if (frankl.size <= options.candidate_edge_limit) {
      solve_candidate(frankl, frankl_family(q), p, options);
    }
    report.candidates.push_back(std::move(frankl));
  }

  for (const CandidateValue& c : report.candidates) {
    if (!c.applicable) continue;
    report.paper_max = std::max(report.paper_max, c.size);
    if (c.feasible.value_or(false)) report.feasible_max = std::max(report.feasible_max, c.size);
  }
  return report;
}

ConjectureReport check_conjecture(const Params& p, const ExtremalOptions& options) {
  ConjectureReport report = conjecture_value(p, options);
  report.stable_only = options.stable_only;
  Params exact_params = p;
  exact_params.i = 0;
  try {
    ExtremalResult exact = extremal_number(exact_params, options);
    report.exact_value = BigCount(exact.value);
    report.witness = std::move(exact.witness);
  } catch (const ResourceError& e) {
    report.exact_note = e.what();
    return report;
  }
  report.agreement_paper = *report.exact_value == report.paper_max ? Agreement::match : Agreement::mismatch;
  report.agreement_feasible =
      *report.exact_value == report.feasible_max ? Agreement::match : Agreement::mismatch;
  return report;
}

BigCount theorem3_threshold(int r, int k, int a) {
  if (k < 1 || k >= r) throw ParameterError("threshold needs 1 <= k < r");
  if (a < 2) throw ParameterError("threshold needs a >= 2");
  const BigCount c = binomial(r, k);
  return BigCount(4) * r * c * c * a;
}

namespace {

InequalityCheck check(BigCount lhs, BigCount rhs, bool strict) {
  InequalityCheck out;
  out.holds = strict ? lhs > rhs : lhs >= rhs;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

InequalityCheck binomial_ratio(int r, int k, int a, std::int64_t n) {
  const BigCount c = binomial(r, k);
  return check(binomial(n - static_cast<std::int64_t>(a - 1) * k, r - k),
               BigCount(a - 1) * c * c * binomial(n - k - 1, r - k - 1), false);
}

}  // namespace

Theorem3Report verify_theorem3_inequalities(int r, int k, int a, std::int64_t n, std::int64_t sweep_length) {
  Theorem3Report report;
  report.threshold = theorem3_threshold(r, k, a);
  if (n < static_cast<std::int64_t>(a - 1) * k + r) {
    throw ParameterError("inequalities need n >= (a-1)k + r");
  }
  if (n > std::numeric_limits<int>::max()) throw ParameterError("n is too large");
  report.r = r;
  report.k = k;
  report.a = a;
  report.n = n;
  const BigCount g = g_count(static_cast<int>(n), r, k, a);
  const BigCount c = binomial(r, k);
  report.disjoint_lower_bound =
      check(g, BigCount(a - 1) * binomial(n - static_cast<std::int64_t>(a - 1) * k, r - k), false);
  report.binomial_ratio = binomial_ratio(r, k, a, n);
  report.degree_exceeds_blocked =
      check(g + 1, BigCount(a - 1) * (a - 1) * c * c * binomial(n - k - 1, r - k - 1), true);

  report.sweep_from = report.threshold.convert_to<std::int64_t>();
  report.sweep_to = report.sweep_from + std::max<std::int64_t>(sweep_length, 1) - 1;
  for (std::int64_t m = report.sweep_from; m <= report.sweep_to; ++m) {
    if (!binomial_ratio(r, k, a, m).holds) {
      report.sweep_holds = false;
      report.sweep_first_failure = m;
      break;
    }
  }
  return report;
}

}  // namespace kmatch
