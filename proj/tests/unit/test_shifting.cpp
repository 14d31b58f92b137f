#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmatch/constructions.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/matching.hpp"
#include "kmatch/shifting.hpp"
#include "support.hpp"

using namespace kmatch;
using test_support::from_lists;

TEST_CASE("shift examples") {
  CHECK(shift(from_lists(3, 2, {{0, 2}}), 0, 1) == from_lists(3, 2, {{1, 2}}));
  const Hypergraph blocked = from_lists(3, 2, {{0, 2}, {1, 2}});
  CHECK(shift(blocked, 0, 1) == blocked);
  const Hypergraph far = from_lists(5, 2, {{1, 2}, {3, 4}});
  CHECK(shift(far, 0, 4) == far);
  CHECK(shift(from_lists(3, 2, {{1, 2}}), 0, 1, ShiftDirection::down) == from_lists(3, 2, {{0, 2}}));
}

TEST_CASE("shift argument errors") {
  const Hypergraph h = from_lists(4, 2, {{0, 1}});
  CHECK_THROWS_AS(shift(h, 1, 1), ArgumentError);
  CHECK_THROWS_AS(shift(h, 2, 1), ArgumentError);
  CHECK_THROWS_AS(shift(h, -1, 1), ArgumentError);
  CHECK_THROWS_AS(shift(h, 0, 4), ArgumentError);
}

TEST_CASE("is_stable") {
  CHECK(is_stable(from_lists(5, 2, {{3, 4}})));
  CHECK_FALSE(is_stable(from_lists(3, 2, {{0, 1}})));
  CHECK(is_stable(complete_hypergraph(6, 3)));
  CHECK(is_stable(complete_hypergraph(6, 3), ShiftDirection::down));
  CHECK(is_stable(from_lists(5, 2, {{0, 1}}), ShiftDirection::down));
}

TEST_CASE("stabilize examples") {
  const Hypergraph stable = complete_hypergraph(5, 3);
  const StabilizeResult same = stabilize(stable);
  CHECK(same.hypergraph == stable);
  CHECK(same.effective_shifts == 0);
  const StabilizeResult moved = stabilize(from_lists(3, 2, {{0, 1}}));
  CHECK(moved.hypergraph == from_lists(3, 2, {{1, 2}}));
  CHECK(moved.effective_shifts >= 1);
}

TEST_CASE("shifts preserve size; stabilize terminates, is stable and idempotent") {
  CounterRng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.between(2, 10);
    const int r = rng.between(1, std::min(n, 4));
    const Hypergraph h = test_support::random_hypergraph(rng, n, r, rng.between(0, 30));
    const auto dir = rng.below(2) == 0 ? ShiftDirection::up : ShiftDirection::down;
    if (n >= 2) {
      const int i = rng.between(0, n - 2);
      const int j = rng.between(i + 1, n - 1);
      CHECK(shift(h, i, j, dir).size() == h.size());
    }
    const StabilizeResult s = stabilize(h, dir);
    CHECK(s.hypergraph.size() == h.size());
    CHECK(is_stable(s.hypergraph, dir));
    CHECK(s.effective_shifts <= static_cast<std::uint64_t>(n) * r * h.size());
    CHECK(stabilize(s.hypergraph, dir).effective_shifts == 0);
  }
}

TEST_CASE("the matching number (k = 1) does not increase under shifts") {
  CounterRng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.between(3, 9);
    const int r = rng.between(1, std::min(n, 4));
    const Hypergraph h = test_support::random_hypergraph(rng, n, r, rng.between(1, 16));
    const std::size_t before = nu_k(h, 1).nu;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) CHECK(nu_k(shift(h, i, j), 1).nu <= before);
    }
  }
}

TEST_CASE("nu_2 can increase under a shift") {
  // Only {0,2,4} moves (to {0,2,5}); then {0,1,4}, {0,2,5}, {1,3,5} is a
  // 2-matching of size 3, while the original has nu_2 = 2.
  const Hypergraph h = from_lists(6, 3, {{0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 2, 4}, {0, 3, 4},
                                          {0, 3, 5}, {0, 4, 5}, {1, 3, 5}});
  const Hypergraph shifted = shift(h, 4, 5);
  CHECK(shifted.size() == h.size());
  CHECK(nu_k(h, 2).nu == 2);
  CHECK(nu_k(shifted, 2).nu == 3);
}
