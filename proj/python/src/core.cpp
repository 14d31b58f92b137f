#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kmatch/constructions.hpp"
#include "kmatch/counting.hpp"
#include "kmatch/coupling.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/extremal.hpp"
#include "kmatch/io.hpp"
#include "kmatch/matching.hpp"
#include "kmatch/shifting.hpp"

namespace py = pybind11;
using namespace kmatch;

namespace {

// Counts cross the boundary as decimal strings; the Python side turns them into ints.
std::string count_str(const BigCount& c) { return to_string(c); }

KSetFamily family_from_lists(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<VertexSet> sets;
  for (const auto& b : blocks) {
    VertexSet s;
    for (int v : b) {
      if (v < 1 || v > n) throw ParameterError("block label outside [1, n]");
      s.insert(v - 1);
    }
    sets.push_back(s);
  }
  return KSetFamily(n, std::move(sets));
}

SearchOptions search(unsigned threads, std::uint64_t budget) {
  SearchOptions opts;
  opts.threads = threads;
  opts.budget = budget;
  return opts;
}

ExtremalOptions extremal_opts(unsigned threads, std::uint64_t budget, bool stable, std::uint64_t limit) {
  ExtremalOptions opts;
  opts.threads = threads;
  opts.budget = budget;
  opts.candidate_budget = budget;
  opts.stable_only = stable;
  opts.universe_limit = limit;
  return opts;
}

ShiftDirection direction(const std::string& d) {
  if (d == "up") return ShiftDirection::up;
  if (d == "down") return ShiftDirection::down;
  throw ParameterError("direction must be 'up' or 'down'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact k-matching computations for r-uniform hypergraphs";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  constexpr std::uint64_t kBudget = 100'000'000;

  m.def("binomial", [](std::int64_t n, std::int64_t k) { return count_str(binomial(n, k)); });
  m.def("g_count", [](int n, int r, int k, int a) { return count_str(g_count(n, r, k, a)); });
  m.def("b_family_size", [](int n, int r, int k, int i) { return count_str(b_family_size(n, r, k, i)); });
  m.def("frankl_family_size",
        [](int n, int r, int k, int a, int i) { return count_str(frankl_family_size({n, r, k, a, i})); });
  m.def("g_recurrence_check", &g_recurrence_check);

  m.def("construct", [](const std::string& kind, int n, int r, int k, int a, int i,
                        const std::vector<std::vector<int>>& blocks) {
    Hypergraph h;
    if (kind == "frankl") {
      h = frankl_family({n, r, k, a, i});
    } else if (kind == "h0") {
      h = h0_family({n, r, k, a, i});
    } else if (kind == "complete") {
      h = complete_hypergraph(n, r);
    } else if (kind == "b") {
      h = ekr_b_family(n, r, k, i);
    } else if (kind == "general") {
      h = generalized_family(n, r, k, i, family_from_lists(n, blocks));
    } else {
      throw ParameterError("unknown construction " + kind);
    }
    return to_json(h).dump();
  }, py::arg("kind"), py::arg("n"), py::arg("r"), py::arg("k") = 1, py::arg("a") = 2, py::arg("i") = 0,
     py::arg("blocks") = std::vector<std::vector<int>>{});

  m.def("nu", [](const std::string& h, int k, unsigned threads, std::uint64_t budget) {
    py::gil_scoped_release release;
    return to_json(nu_k(parse_hypergraph(h), k, search(threads, budget))).dump();
  }, py::arg("hypergraph"), py::arg("k"), py::arg("threads") = 0, py::arg("budget") = kBudget);

  m.def("decide", [](const std::string& h, int k, std::size_t size, unsigned threads, std::uint64_t budget) {
    py::gil_scoped_release release;
    const auto w = has_k_matching_of_size(parse_hypergraph(h), k, size, search(threads, budget));
    return w ? to_json(w->edges).dump() : std::string("null");
  }, py::arg("hypergraph"), py::arg("k"), py::arg("size"), py::arg("threads") = 0, py::arg("budget") = kBudget);

  m.def("greedy", [](const std::string& h, int k) {
    return to_json(greedy_maximal_k_matching(parse_hypergraph(h), k).edges).dump();
  });

  m.def("is_k_matching", [](const std::string& h, const std::vector<std::vector<int>>& edges, int k) {
    const Hypergraph g = parse_hypergraph(h);
    std::vector<VertexSet> sets;
    for (const auto& e : edges) {
      VertexSet s;
      for (int v : e) {
        if (v < 1 || v > g.vertex_count()) throw ArgumentError("edge is not in the hypergraph");
        s.insert(v - 1);
      }
      sets.push_back(s);
    }
    return is_k_matching(g, sets, k);
  });

  m.def("shift", [](const std::string& h, int i, int j, const std::string& d) {
    return to_json(shift(parse_hypergraph(h), i - 1, j - 1, direction(d))).dump();
  }, py::arg("hypergraph"), py::arg("i"), py::arg("j"), py::arg("direction") = "up");
  m.def("is_stable", [](const std::string& h, const std::string& d) {
    return is_stable(parse_hypergraph(h), direction(d));
  }, py::arg("hypergraph"), py::arg("direction") = "up");
  m.def("stabilize", [](const std::string& h, const std::string& d) {
    return to_json(stabilize(parse_hypergraph(h), direction(d))).dump();
  }, py::arg("hypergraph"), py::arg("direction") = "up");

  m.def("verify_coupling", [](int n, int r, int k, int i, const std::vector<std::vector<int>>& blocks,
                              bool randomized, std::uint64_t seed) {
    return to_json(verify_coupling(family_from_lists(n, blocks), r, k, i, {randomized, seed, 0})).dump();
  }, py::arg("n"), py::arg("r"), py::arg("k"), py::arg("i"), py::arg("blocks"), py::arg("randomized") = false,
     py::arg("seed") = 0);
  m.def("disjointify", [](int n, int r, int k, int i, const std::vector<std::vector<int>>& blocks,
                          bool randomized, std::uint64_t seed) {
    return to_json(disjointify(family_from_lists(n, blocks), r, k, i, {randomized, seed, 0})).dump();
  }, py::arg("n"), py::arg("r"), py::arg("k"), py::arg("i"), py::arg("blocks"), py::arg("randomized") = false,
     py::arg("seed") = 0);

  m.def("extremal_number", [](int n, int r, int k, int a, bool stable, std::uint64_t limit, unsigned threads,
                              std::uint64_t budget) {
    py::gil_scoped_release release;
    return to_json(extremal_number({n, r, k, a, 0}, extremal_opts(threads, budget, stable, limit))).dump();
  }, py::arg("n"), py::arg("r"), py::arg("k"), py::arg("a"), py::arg("stable") = false,
     py::arg("universe_limit") = 64, py::arg("threads") = 0, py::arg("budget") = kBudget);

  m.def("conjecture_value", [](int n, int r, int k, int a, unsigned threads, std::uint64_t budget) {
    py::gil_scoped_release release;
    return to_json(conjecture_value({n, r, k, a, 0}, extremal_opts(threads, budget, false, 64))).dump();
  }, py::arg("n"), py::arg("r"), py::arg("k"), py::arg("a"), py::arg("threads") = 0, py::arg("budget") = kBudget);
  m.def("check_conjecture", [](int n, int r, int k, int a, bool stable, std::uint64_t limit, unsigned threads,
                               std::uint64_t budget) {
    py::gil_scoped_release release;
    return to_json(check_conjecture({n, r, k, a, 0}, extremal_opts(threads, budget, stable, limit))).dump();
  }, py::arg("n"), py::arg("r"), py::arg("k"), py::arg("a"), py::arg("stable") = false,
     py::arg("universe_limit") = 64, py::arg("threads") = 0, py::arg("budget") = kBudget);

  m.def("theorem3_threshold", [](int r, int k, int a) { return count_str(theorem3_threshold(r, k, a)); });
  m.def("verify_theorem3_inequalities", [](int r, int k, int a, std::int64_t n, std::int64_t sweep) {
    return to_json(verify_theorem3_inequalities(r, k, a, n, sweep)).dump();
  }, py::arg("r"), py::arg("k"), py::arg("a"), py::arg("n"), py::arg("sweep_length") = 64);
}
