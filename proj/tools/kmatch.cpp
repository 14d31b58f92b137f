#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kmatch/constructions.hpp"
#include "kmatch/counting.hpp"
#include "kmatch/coupling.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/extremal.hpp"
#include "kmatch/io.hpp"
#include "kmatch/matching.hpp"
#include "kmatch/rng.hpp"
#include "kmatch/shifting.hpp"

using namespace kmatch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Global {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::optional<std::uint64_t> budget;
  std::string format = "json";
  std::string out;
};

/// What a subcommand produced: either a JSON document or ready-made CSV rows.
struct Report {
  Json doc;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int code = kExitOk;
};

std::string csv_cell(const Json& value) {
  std::string text = value.is_string() ? value.get<std::string>() : value.is_null() ? "" : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render(const Report& report, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << report.doc.dump() << '\n';
    return out.str();
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
    out << '\n';
  };
  if (!report.csv_header.empty()) {
    line(report.csv_header);
    for (const auto& row : report.csv_rows) line(row);
    return out.str();
  }
  // One row holding the top-level fields; nested values are embedded as JSON.
  std::vector<std::string> header;
  std::vector<std::string> row;
  if (report.doc.is_object()) {
    for (const auto& [key, value] : report.doc.items()) {
      header.push_back(key);
      row.push_back(csv_cell(value));
    }
  } else {
    header.push_back("value");
    row.push_back(csv_cell(report.doc));
  }
  line(header);
  line(row);
  return out.str();
}

SearchOptions search_options(const Global& g) {
  SearchOptions opts;
  opts.threads = g.threads;
  if (g.budget) opts.budget = *g.budget;
  return opts;
}

ExtremalOptions extremal_options(const Global& g) {
  ExtremalOptions opts;
  opts.threads = g.threads;
  if (g.budget) {
    opts.budget = *g.budget;
    opts.candidate_budget = *g.budget;
  }
  return opts;
}

ShiftDirection parse_direction(const std::string& text) {
  return text == "down" ? ShiftDirection::down : ShiftDirection::up;
}

KSetFamily parse_family(int n, const std::vector<std::string>& blocks) {
  std::vector<VertexSet> sets;
  for (const std::string& b : blocks) sets.push_back(parse_block(b));
  return KSetFamily(n, std::move(sets));
}

Json counts_row(const Params& p, const std::string& family, const BigCount& count, bool with_i) {
  Json row;
  row["n"] = p.n;
  row["r"] = p.r;
  row["k"] = p.k;
  row["a"] = p.a;
  row["i"] = with_i ? Json(p.i) : Json(nullptr);
  row["family"] = family;
  row["count"] = to_json(count);
  return row;
}

Report table(Json rows, const std::vector<std::string>& columns) {
  Report report;
  report.csv_header = columns;
  for (const Json& row : rows) {
    std::vector<std::string> cells;
    for (const std::string& c : columns) cells.push_back(csv_cell(row[c]));
    report.csv_rows.push_back(std::move(cells));
  }
  report.doc = std::move(rows);
  return report;
}

const char* kSweepHelp =
    "Sweeps every valid (n, r, k, a) in the given ranges.\n"
    "CSV columns for --kind counts: n,r,k,a,i,family,count\n"
    "  (family is frankl, one row per block parameter i, or h0 with i empty)\n"
    "CSV columns for --kind conjecture: n,r,k,a,exact,paper_max,feasible_max,agreement\n"
    "  (exact is empty when the exhaustive search is unavailable; agreement\n"
    "  compares exact with feasible_max)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for k-matchings in r-uniform hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Global global;
  app.add_option("--seed", global.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads (0 = all hardware threads)")
      ->capture_default_str();
  app.add_option("--budget", global.budget, "Branch-node budget for exact searches");
  app.add_option("--format", global.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", global.out, "Write the report to this file instead of standard output");

  std::function<Report()> action;
  Params p;
  std::string in_path;
  std::string direction = "up";
  std::vector<std::string> blocks;

  auto add_params = [&](CLI::App* cmd, bool need_k, bool need_a, bool need_i) {
    cmd->add_option("--n", p.n, "Number of vertices")->required();
    cmd->add_option("--r", p.r, "Edge size")->required();
    if (need_k) cmd->add_option("--k", p.k, "Matching parameter k")->required();
    if (need_a) cmd->add_option("--a", p.a, "Forbidden matching size a")->required();
    if (need_i) cmd->add_option("--i", p.i, "Block parameter i")->required();
  };
  auto hypergraph = [&] { return load_hypergraph(in_path); };

  // count
  auto* count = app.add_subcommand("count", "Closed-form counts");
  count->require_subcommand(1);
  auto* count_g = count->add_subcommand("g", "g(n,r,k,a): r-sets containing one of a-1 disjoint k-sets");
  add_params(count_g, true, true, false);
  count_g->callback([&] {
    action = [&] {
      Report r;
      r.doc["g"] = to_json(g_count(p.n, p.r, p.k, p.a));
      return r;
    };
  });
  auto* count_binomial = count->add_subcommand("binomial", "C(n, r)");
  count_binomial->add_option("--n", p.n)->required();
  count_binomial->add_option("--r", p.r)->required();
  count_binomial->callback([&] {
    action = [&] {
      if (p.n < 0) throw ParameterError("binomial needs n >= 0");
      Report r;
      r.doc["binomial"] = to_json(binomial(p.n, p.r));
      return r;
    };
  });
  auto* count_b = count->add_subcommand("b-size", "|B_i|: r-sets meeting [k+2i] in at least k+i vertices");
  add_params(count_b, true, false, true);
  count_b->callback([&] {
    action = [&] {
      Report r;
      r.doc["b_size"] = to_json(b_family_size(p.n, p.r, p.k, p.i));
      return r;
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Write a named hypergraph");
  construct->require_subcommand(1);
  auto* c_frankl = construct->add_subcommand("frankl", "Frankl family on canonical blocks");
  add_params(c_frankl, true, true, true);
  c_frankl->callback([&] { action = [&] { return Report{to_json(frankl_family(p))}; }; });
  auto* c_h0 = construct->add_subcommand("h0", "All r-subsets of [n0]");
  add_params(c_h0, true, true, false);
  c_h0->callback([&] { action = [&] { return Report{to_json(h0_family(p))}; }; });
  auto* c_complete = construct->add_subcommand("complete", "All r-subsets of [n]");
  add_params(c_complete, false, false, false);
  c_complete->callback([&] { action = [&] { return Report{to_json(complete_hypergraph(p.n, p.r))}; }; });
  auto* c_b = construct->add_subcommand("b", "B_i: r-sets meeting [k+2i] in at least k+i vertices");
  add_params(c_b, true, false, true);
  c_b->callback([&] { action = [&] { return Report{to_json(ekr_b_family(p.n, p.r, p.k, p.i))}; }; });
  auto* c_general = construct->add_subcommand("general", "r-sets meeting some given block in at least k+i vertices");
  add_params(c_general, true, false, true);
  c_general->add_option("--block", blocks, "Block as 1-based labels, e.g. 1,2,3 (repeatable)")->required();
  c_general->callback([&] {
    action = [&] { return Report{to_json(generalized_family(p.n, p.r, p.k, p.i, parse_family(p.n, blocks)))}; };
  });

  // nu, decide, greedy
  std::size_t size = 0;
  auto* nu = app.add_subcommand("nu", "Exact k-matching number with a witness");
  nu->add_option("--k", p.k)->required();
  nu->add_option("--in", in_path, "Hypergraph JSON file")->required();
  nu->callback([&] { action = [&] { return Report{to_json(nu_k(hypergraph(), p.k, search_options(global)))}; }; });

  auto* decide = app.add_subcommand("decide", "Is there a k-matching with the given number of edges?");
  decide->add_option("--k", p.k)->required();
  decide->add_option("--size", size, "Number of edges")->required();
  decide->add_option("--in", in_path, "Hypergraph JSON file")->required();
  decide->callback([&] {
    action = [&] {
      const auto witness = has_k_matching_of_size(hypergraph(), p.k, size, search_options(global));
      Report r;
      r.doc["k"] = p.k;
      r.doc["size"] = size;
      r.doc["exists"] = witness.has_value();
      r.doc["witness"] = witness ? to_json(witness->edges) : Json(nullptr);
      return r;
    };
  });

  auto* greedy = app.add_subcommand("greedy", "Greedy maximal k-matching in colex order");
  greedy->add_option("--k", p.k)->required();
  greedy->add_option("--in", in_path, "Hypergraph JSON file")->required();
  greedy->callback([&] {
    action = [&] {
      const MatchingWitness w = greedy_maximal_k_matching(hypergraph(), p.k);
      Report r;
      r.doc["k"] = p.k;
      r.doc["size"] = w.size();
      r.doc["matching"] = to_json(w.edges);
      return r;
    };
  });

  // shift
  int shift_i = 0;
  int shift_j = 0;
  auto* shift_cmd = app.add_subcommand("shift", "The (i,j)-shift");
  shift_cmd->require_subcommand(1);
  shift_cmd->add_option("--direction", direction, "up moves i to j (i < j); down moves j to i")
      ->check(CLI::IsMember({"up", "down"}))
      ->capture_default_str();
  auto* s_apply = shift_cmd->add_subcommand("apply", "Apply one shift");
  s_apply->add_option("--i", shift_i, "Smaller vertex (1-based)")->required();
  s_apply->add_option("--j", shift_j, "Larger vertex (1-based)")->required();
  s_apply->add_option("--in", in_path)->required();
  s_apply->callback([&] {
    action = [&] { return Report{to_json(shift(hypergraph(), shift_i - 1, shift_j - 1, parse_direction(direction)))}; };
  });
  auto* s_stab = shift_cmd->add_subcommand("stabilize", "Shift until stable");
  s_stab->add_option("--in", in_path)->required();
  s_stab->callback([&] { action = [&] { return Report{to_json(stabilize(hypergraph(), parse_direction(direction)))}; }; });
  auto* s_check = shift_cmd->add_subcommand(
      "check", "Check every (i,j)-shift keeps the edge count and does not raise nu_k");
  s_check->add_option("--k", p.k)->required();
  s_check->add_option("--in", in_path)->required();
  s_check->callback([&] {
    action = [&] {
      const Hypergraph h = hypergraph();
      const ShiftDirection dir = parse_direction(direction);
      const SearchOptions opts = search_options(global);
      const std::size_t before = nu_k(h, p.k, opts).nu;
      Json violations = Json::array();
      bool sizes_ok = true;
      std::uint64_t pairs = 0;
      for (int i = 0; i < h.vertex_count(); ++i) {
        for (int j = i + 1; j < h.vertex_count(); ++j) {
          const Hypergraph s = shift(h, i, j, dir);
          ++pairs;
          if (s.size() != h.size()) sizes_ok = false;
          const std::size_t after = nu_k(s, p.k, opts).nu;
          if (after > before) violations.push_back({{"i", i + 1}, {"j", j + 1}, {"nu_after", after}});
        }
      }
      const StabilizeResult st = stabilize(h, dir);
      Report r;
      r.doc["k"] = p.k;
      r.doc["direction"] = direction;
      r.doc["pairs"] = pairs;
      r.doc["edges"] = h.size();
      r.doc["sizes_preserved"] = sizes_ok;
      r.doc["nu"] = before;
      r.doc["nu_increases"] = violations;
      r.doc["stabilize_shifts"] = st.effective_shifts;
      r.doc["stabilize_cap"] = static_cast<std::uint64_t>(h.vertex_count()) * h.uniformity() * h.size();
      r.doc["stabilized_nu"] = nu_k(st.hypergraph, p.k, opts).nu;
      r.code = sizes_ok && violations.empty() ? kExitOk : kExitViolation;
      return r;
    };
  });

  // coupling
  bool randomized = false;
  auto* coupling = app.add_subcommand("coupling", "Block disjointification and its coupling");
  coupling->require_subcommand(1);
  auto mode = [&] { return PlacementMode{randomized, global.seed, 0}; };
  auto* cv = coupling->add_subcommand("verify", "Classify every r-set against one disjointification step");
  add_params(cv, true, false, true);
  cv->add_option("--block", blocks, "Block as 1-based labels (repeatable)")->required();
  cv->add_flag("--randomized", randomized, "Draw the pair, R and phi from --seed");
  cv->callback([&] {
    action = [&] {
      const CouplingReport report = verify_coupling(parse_family(p.n, blocks), p.r, p.k, p.i, mode());
      Report r{to_json(report)};
      r.code = report.consistent() ? kExitOk : kExitViolation;
      return r;
    };
  });
  auto* cd = coupling->add_subcommand("disjointify", "Repeat disjointification steps, tracing |H(T)|");
  add_params(cd, true, false, true);
  cd->add_option("--block", blocks, "Block as 1-based labels (repeatable)")->required();
  cd->add_flag("--randomized", randomized, "Draw the pair, R and phi from --seed");
  cd->callback([&] {
    action = [&] {
      const KSetFamily family = parse_family(p.n, blocks);
      const DisjointifyResult res = disjointify(family, p.r, p.k, p.i, mode());
      Report r{to_json(res)};
      const Params frankl{p.n, p.r, p.k, static_cast<int>(family.size()) + 1, p.i};
      const BigCount expected = frankl_family_size(frankl);
      r.doc["frankl_count"] = to_json(expected);
      r.code = res.monotone() && res.trace.back() == expected ? kExitOk : kExitViolation;
      return r;
    };
  });

  // extremal
  bool stable_only = false;
  std::uint64_t universe_limit = 64;
  auto* extremal = app.add_subcommand("extremal", "Largest family with no k-matching of size a");
  add_params(extremal, true, true, false);
  extremal->add_flag("--stable", stable_only, "Only search families fixed by every shift");
  extremal->add_option("--universe-limit", universe_limit, "Largest C(n, r) to search")->capture_default_str();
  extremal->callback([&] {
    action = [&] {
      ExtremalOptions opts = extremal_options(global);
      opts.stable_only = stable_only;
      opts.universe_limit = universe_limit;
      return Report{to_json(extremal_number(p, opts))};
    };
  });

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "Candidate constructions against the exact optimum");
  conjecture->require_subcommand(1);
  auto* cj_value = conjecture->add_subcommand("value", "Candidate sizes and their k-matching numbers");
  add_params(cj_value, true, true, false);
  cj_value->callback([&] { action = [&] { return Report{to_json(conjecture_value(p, extremal_options(global)))}; }; });
  auto* cj_check = conjecture->add_subcommand(
      "check", "Candidates plus exact search; exits 1 when the exact optimum differs from the best feasible candidate");
  add_params(cj_check, true, true, false);
  cj_check->add_flag("--stable", stable_only, "Only search families fixed by every shift");
  cj_check->add_option("--universe-limit", universe_limit, "Largest C(n, r) to search")->capture_default_str();
  cj_check->callback([&] {
    action = [&] {
      ExtremalOptions opts = extremal_options(global);
      opts.stable_only = stable_only;
      opts.universe_limit = universe_limit;
      const ConjectureReport report = check_conjecture(p, opts);
      Report r{to_json(report)};
      r.code = report.agreement_feasible == Agreement::mismatch ? kExitViolation : kExitOk;
      return r;
    };
  });

  // bounds
  std::int64_t bound_n = 0;
  std::int64_t sweep_length = 64;
  auto* bounds = app.add_subcommand("bounds", "The large-n threshold and its inequalities");
  bounds->require_subcommand(1);
  auto* b_threshold = bounds->add_subcommand("threshold", "4 r C(r,k)^2 a");
  b_threshold->add_option("--r", p.r)->required();
  b_threshold->add_option("--k", p.k)->required();
  b_threshold->add_option("--a", p.a)->required();
  b_threshold->callback([&] {
    action = [&] {
      if (p.k < 1 || p.k >= p.r || p.a < 2) throw ParameterError("threshold needs 1 <= k < r and a >= 2");
      Report r;
      r.doc["threshold"] = to_json(theorem3_threshold(p.r, p.k, p.a));
      return r;
    };
  });
  auto* b_ineq = bounds->add_subcommand("inequalities", "Evaluate the three inequalities exactly at n");
  b_ineq->add_option("--r", p.r)->required();
  b_ineq->add_option("--k", p.k)->required();
  b_ineq->add_option("--a", p.a)->required();
  b_ineq->add_option("--n", bound_n, "Vertex count (default: the threshold)");
  b_ineq->add_option("--sweep", sweep_length, "Values of n checked from the threshold up")->capture_default_str();
  b_ineq->callback([&] {
    action = [&] {
      if (p.k < 1 || p.k >= p.r || p.a < 2) throw ParameterError("inequalities need 1 <= k < r and a >= 2");
      const std::int64_t n =
          bound_n > 0 ? bound_n : static_cast<std::int64_t>(theorem3_threshold(p.r, p.k, p.a));
      const Theorem3Report report = verify_theorem3_inequalities(p.r, p.k, p.a, n, sweep_length);
      Report r{to_json(report)};
      r.code = report.all_hold() ? kExitOk : kExitViolation;
      return r;
    };
  });

  // sweep
  std::string kind = "counts";
  int n_min = 2;
  int n_max = 8;
  int r_max = 4;
  int a_max = 4;
  auto* sweep = app.add_subcommand("sweep", kSweepHelp);
  sweep->add_option("--kind", kind)->check(CLI::IsMember({"counts", "conjecture"}))->capture_default_str();
  sweep->add_option("--n-min", n_min)->capture_default_str();
  sweep->add_option("--n-max", n_max)->capture_default_str();
  sweep->add_option("--r-max", r_max)->capture_default_str();
  sweep->add_option("--a-max", a_max)->capture_default_str();
  sweep->add_option("--universe-limit", universe_limit, "Largest C(n, r) for exact search")->capture_default_str();
  sweep->callback([&] {
    action = [&] {
      if (n_min < 1 || n_max > 128 || r_max < 2 || a_max < 2) {
        throw ParameterError("sweep needs 1 <= n-min, n-max <= 128, r-max >= 2, a-max >= 2");
      }
      Json rows = Json::array();
      bool mismatch = false;
      ExtremalOptions opts = extremal_options(global);
      opts.universe_limit = universe_limit;
      for (int n = n_min; n <= n_max; ++n) {
        for (int r = 2; r <= std::min(r_max, n); ++r) {
          for (int k = 1; k < r; ++k) {
            for (int a = 2; a <= a_max; ++a) {
              Params q{n, r, k, a, 0};
              if (static_cast<std::int64_t>(a - 1) * k > n) continue;
              if (kind == "counts") {
                for (q.i = 0; q.i <= q.max_block_parameter(); ++q.i) {
                  rows.push_back(counts_row(q, "frankl", frankl_family_size(q), true));
                }
                q.i = 0;
                if (r >= (a - 1) * (k - 1) + 1 && n >= q.n0()) {
                  rows.push_back(counts_row(q, "h0", binomial(q.n0(), r), false));
                }
                continue;
              }
              const ConjectureReport report = check_conjecture(q, opts);
              if (report.hypotheses_hold && report.agreement_feasible == Agreement::mismatch) mismatch = true;
              Json row;
              row["n"] = n;
              row["r"] = r;
              row["k"] = k;
              row["a"] = a;
              row["exact"] = report.exact_value ? to_json(*report.exact_value) : Json(nullptr);
              row["paper_max"] = to_json(report.paper_max);
              row["feasible_max"] = to_json(report.feasible_max);
              row["agreement"] = to_string(report.agreement_feasible);
              rows.push_back(std::move(row));
            }
          }
        }
      }
      Report r = kind == "counts"
                     ? table(std::move(rows), {"n", "r", "k", "a", "i", "family", "count"})
                     : table(std::move(rows), {"n", "r", "k", "a", "exact", "paper_max", "feasible_max", "agreement"});
      r.code = mismatch ? kExitViolation : kExitOk;
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Report report = action();
    const std::string text = render(report, global.format);
    if (global.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(global.out);
      if (!file) {
        std::cerr << "error: cannot write " << global.out << '\n';
        return kExitUsage;
      }
      file << text;
    }
    return report.code;
  } catch (const ExtremalSearchIncomplete& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    Json partial;
    partial["optimal"] = false;
    partial["best_found"] = to_json(e.best_found());
    std::cout << partial.dump() << '\n';
    return kExitBudget;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what();
    if (e.lower_bound()) std::cerr << " (best found so far: " << *e.lower_bound() << ')';
    std::cerr << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
