#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kmatch/big_count.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/hypergraph.hpp"
#include "kmatch/matching.hpp"
#include "kmatch/params.hpp"

namespace kmatch {

struct ExtremalOptions {
  /// Largest r-set universe C(n, r) the search will accept.
  std::uint64_t universe_limit = 64;
  /// Branch nodes of the outer search.
  std::uint64_t budget = 100'000'000;
  unsigned threads = 0;
  /// Only consider families fixed by every up-shift.
  bool stable_only = false;
  /// Budget for nu_k computations on candidate families.
  std::uint64_t candidate_budget = 100'000'000;
  /// Candidates larger than this are sized but not solved.
  std::uint64_t candidate_edge_limit = 5000;
};

struct ExtremalResult {
  std::uint64_t value = 0;
  /// The first optimal family in include-first colex order.
  Hypergraph witness;
};

/// Thrown when the outer search runs out of budget; carries the best
/// feasible family found, which is not known to be optimal.
class ExtremalSearchIncomplete : public ResourceError {
 public:
  ExtremalSearchIncomplete(const std::string& what, Hypergraph best)
      : ResourceError(what, best.size()), best_(std::move(best)) {}
  [[nodiscard]] const Hypergraph& best_found() const { return best_; }

 private:
  Hypergraph best_;
};

/// Maximum number of r-subsets of [n] with no k-matching of size a, with a
/// witness. Branch and bound over the r-sets in colex order (descending in
/// stable-only mode). Requires C(n, r) <= options.universe_limit, else
/// ResourceError.
ExtremalResult extremal_number(const Params& p, const ExtremalOptions& options = {});

enum class Agreement { match, mismatch, exact_unavailable };
std::string to_string(Agreement agreement);

struct CandidateValue {
  std::string name;  // "h0" or "frankl_<i>"
  /// False when the construction is undefined for these parameters.
  bool applicable = true;
  BigCount size;
  /// nu_k of the candidate when it was computed.
  std::optional<std::uint64_t> nu;
  /// nu < a, when nu is known.
  std::optional<bool> feasible;
};

struct ConjectureReport {
  Params params;
  /// n >= ra, 1 <= k < r and a >= 2.
  bool hypotheses_hold = true;
  std::vector<CandidateValue> candidates;
  /// Max over every applicable candidate, feasible or not.
  BigCount paper_max;
  /// Max over candidates proven feasible.
  BigCount feasible_max;
  std::optional<BigCount> exact_value;
  /// exact_value is the optimum over stable families only.
  bool stable_only = false;
  std::optional<Hypergraph> witness;
  /// Why exact_value is missing, when it is.
  std::string exact_note;
  Agreement agreement_paper = Agreement::exact_unavailable;
  Agreement agreement_feasible = Agreement::exact_unavailable;
};

/// Sizes of every candidate with their k-matching numbers; no exact search.
ConjectureReport conjecture_value(const Params& p, const ExtremalOptions& options = {});

/// conjecture_value plus extremal_number and both comparisons. Budget or
/// universe-limit failures leave the exact side unavailable.
ConjectureReport check_conjecture(const Params& p, const ExtremalOptions& options = {});

/// 4 r C(r,k)^2 a.
BigCount theorem3_threshold(int r, int k, int a);

struct InequalityCheck {
  bool holds = false;
  BigCount lhs;
  BigCount rhs;
  /// lhs - rhs.
  [[nodiscard]] BigCount margin() const { return lhs - rhs; }
};

struct Theorem3Report {
  int r = 0;
  int k = 0;
  int a = 0;
  std::int64_t n = 0;
  BigCount threshold;
  /// g(n,r,k,a) >= (a-1) C(n-(a-1)k, r-k).
  InequalityCheck disjoint_lower_bound;
  /// C(n-(a-1)k, r-k) >= (a-1) C(r,k)^2 C(n-k-1, r-k-1).
  InequalityCheck binomial_ratio;
  /// 1 + g(n,r,k,a) > (a-1)^2 C(r,k)^2 C(n-k-1, r-k-1): the degree floor of
  /// the heaviest k-set beats the r-sets blocked by a-1 matched edges.
  InequalityCheck degree_exceeds_blocked;
  /// binomial_ratio over n = threshold .. threshold + sweep_length - 1.
  std::int64_t sweep_from = 0;
  std::int64_t sweep_to = 0;
  bool sweep_holds = true;
  std::optional<std::int64_t> sweep_first_failure;

  [[nodiscard]] bool all_hold() const {
    return disjoint_lower_bound.holds && binomial_ratio.holds && degree_exceeds_blocked.holds &&
           sweep_holds;
  }
};

/// Exact evaluation of the three inequalities at n. Requires 1 <= k < r,
/// a >= 2 and n >= (a-1)k + r.
Theorem3Report verify_theorem3_inequalities(int r, int k, int a, std::int64_t n,
                                            std::int64_t sweep_length = 64);

}  // namespace kmatch
