#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmatch/constructions.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/matching.hpp"
#include "support.hpp"

using namespace kmatch;
using test_support::from_lists;

namespace {

// Lexicographically least maximum k-matching by index, over all edge subsets.
std::vector<std::size_t> least_maximum(const std::vector<oracle::Mask>& edges, int k) {
  const std::size_t m = edges.size();
  std::vector<std::size_t> best;
  for (std::uint32_t s = 1; s < (1U << m); ++s) {
    std::vector<std::size_t> pick;
    for (std::size_t u = 0; u < m; ++u) {
      if (s >> u & 1U) pick.push_back(u);
    }
    bool ok = true;
    for (std::size_t x = 0; x < pick.size() && ok; ++x) {
      for (std::size_t y = x + 1; y < pick.size() && ok; ++y) ok = oracle::meet(edges[pick[x]], edges[pick[y]]) <= k - 1;
    }
    if (!ok) continue;
    if (pick.size() > best.size() || (pick.size() == best.size() && pick < best)) best = pick;
  }
  return best;
}

}  // namespace

TEST_CASE("is_k_matching") {
  const Hypergraph h = complete_hypergraph(5, 3);
  CHECK(is_k_matching(h, {{0, 1, 2}, {0, 3, 4}}, 2));
  CHECK_FALSE(is_k_matching(h, {{0, 1, 2}, {0, 1, 3}}, 2));
  for (const VertexSet& e : h.edges()) {
    for (int k = 1; k <= 3; ++k) CHECK(is_k_matching(h, {e}, k));
  }
  CHECK(is_k_matching(h, {}, 1));
  const Hypergraph small = from_lists(5, 3, {{0, 1, 2}});
  CHECK_THROWS_AS(is_k_matching(small, {{0, 1, 3}}, 2), ArgumentError);
}

TEST_CASE("nu_k examples") {
  CHECK(nu_k(from_lists(4, 2, {{0, 1}, {2, 3}}), 1).nu == 2);
  CHECK(nu_k(complete_hypergraph(5, 3), 2).nu == 2);
  CHECK(nu_k(complete_hypergraph(6, 3), 2).nu == 4);
  CHECK(nu_k(complete_hypergraph(7, 3), 2).nu == 7);
  CHECK(nu_k(frankl_family({10, 3, 2, 3, 0}), 2).nu == 2);
  CHECK(nu_k(complete_hypergraph(6, 3), 3).nu == 20);
  CHECK(nu_k(Hypergraph(5, 3, {}), 2).nu == 0);
}

TEST_CASE("has_k_matching_of_size examples") {
  const auto w = has_k_matching_of_size(complete_hypergraph(6, 3), 2, 4);
  REQUIRE(w.has_value());
  CHECK(w->size() == 4);
  CHECK(w->edges == std::vector<VertexSet>{{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  CHECK_FALSE(has_k_matching_of_size(complete_hypergraph(5, 3), 2, 3).has_value());
  const Hypergraph h = from_lists(6, 3, {{1, 2, 3}, {0, 4, 5}});
  const auto one = has_k_matching_of_size(h, 2, 1);
  REQUIRE(one.has_value());
  CHECK(one->edges == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(has_k_matching_of_size(h, 2, 0).value().size() == 0);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  SearchOptions tight;
  tight.budget = 5;
  tight.threads = 1;
  CHECK_THROWS_AS(nu_k(complete_hypergraph(9, 4), 2, tight), ResourceError);
  CHECK_THROWS_AS(has_k_matching_of_size(complete_hypergraph(9, 4), 2, 7, tight), ResourceError);
  try {
    nu_k(complete_hypergraph(9, 4), 2, tight);
  } catch (const ResourceError& e) {
    CHECK(e.lower_bound().has_value());
  }
}

TEST_CASE("nu_k equals the subset oracle and returns the least optimum") {
  CounterRng rng(7);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = rng.between(3, 9);
    const int r = rng.between(1, std::min(n, 4));
    const int k = rng.between(1, r);
    const Hypergraph h = test_support::random_hypergraph(rng, n, r, rng.between(0, 14));
    const auto edges = test_support::masks(h);
    SearchOptions opts;
    opts.threads = 1;
    const NuResult got = nu_k(h, k, opts);
    CHECK(got.nu == static_cast<std::size_t>(oracle::max_k_matching(edges, k)));
    CHECK(got.witness.size() == got.nu);
    CHECK(is_k_matching(h, got.witness.edges, k));
    std::vector<VertexSet> expected;
    for (std::size_t u : least_maximum(edges, k)) expected.push_back(h.edges()[u]);
    CHECK(got.witness.edges == expected);

    const MatchingWitness greedy = greedy_maximal_k_matching(h, k);
    CHECK(greedy.size() <= got.nu);
    CHECK(is_k_matching(h, greedy.edges, k));
    for (const VertexSet& e : h.edges()) {
      if (std::find(greedy.edges.begin(), greedy.edges.end(), e) != greedy.edges.end()) continue;
      std::vector<VertexSet> more = greedy.edges;
      more.push_back(e);
      CHECK_FALSE(is_k_matching(h, more, k));
    }
  }
}

TEST_CASE("nu_k is monotone under edge deletion") {
  CounterRng rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rng.between(4, 9);
    const int r = rng.between(2, std::min(n, 4));
    const int k = rng.between(1, r);
    const Hypergraph h = test_support::random_hypergraph(rng, n, r, rng.between(1, 25));
    std::vector<VertexSet> kept;
    for (const VertexSet& e : h.edges()) {
      if (rng.below(2) == 0) kept.push_back(e);
    }
    const Hypergraph sub(n, r, kept);
    CHECK(nu_k(sub, k).nu <= nu_k(h, k).nu);
  }
}

TEST_CASE("nu_k of Frankl families is at most a-1, with equality at i = 0 and n >= ra") {
  for (int n = 4; n <= 10; ++n) {
    for (int r = 2; r <= 4 && r <= n; ++r) {
      for (int k = 1; k < r; ++k) {
        for (int a = 2; a <= 3; ++a) {
          Params p{n, r, k, a, 0};
          if ((a - 1) * k > n) continue;
          for (p.i = 0; p.i <= p.max_block_parameter() && k + p.i <= r; ++p.i) {
            const std::size_t nu = nu_k(frankl_family(p), k).nu;
            CHECK(nu <= static_cast<std::size_t>(a - 1));
            if (p.i == 0 && n >= r * a) CHECK(nu == static_cast<std::size_t>(a - 1));
          }
        }
      }
    }
  }
}

TEST_CASE("greedy examples") {
  const MatchingWitness g = greedy_maximal_k_matching(complete_hypergraph(5, 3), 2);
  CHECK(g.size() == 2);
  CHECK(g.edges.front() == VertexSet{0, 1, 2});
  const Hypergraph single = from_lists(6, 3, {{2, 3, 5}});
  CHECK(greedy_maximal_k_matching(single, 2).edges == std::vector<VertexSet>{{2, 3, 5}});
  CHECK(greedy_maximal_k_matching(frankl_family({9, 3, 2, 3, 0}), 2).size() == 2);
}

TEST_CASE("results do not depend on the thread count") {
  CounterRng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.between(6, 10);
    const Hypergraph h = test_support::random_hypergraph(rng, n, 3, rng.between(10, 60));
    SearchOptions one;
    one.threads = 1;
    SearchOptions many;
    many.threads = 8;
    const NuResult a = nu_k(h, 2, one);
    const NuResult b = nu_k(h, 2, many);
    CHECK(a.nu == b.nu);
    CHECK(a.witness == b.witness);
    const auto da = has_k_matching_of_size(h, 2, a.nu, one);
    const auto db = has_k_matching_of_size(h, 2, a.nu, many);
    CHECK(da == db);
  }
}
