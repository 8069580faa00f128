#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "mqtc/cost.hpp"
#include "mqtc/mutation.hpp"
#include "mqtc/random.hpp"
#include "mqtc/tree.hpp"

namespace mqtc {

enum class Termination { simple, agreement };
enum class SearchMode { hill_climb, metropolis };
enum class ScorerKind { naive, fast };
enum class TerminationReason { perfect_score, patience_exhausted, max_trees_reached, agreement };

std::string_view to_string(Termination t) noexcept;
std::string_view to_string(SearchMode m) noexcept;
std::string_view to_string(ScorerKind s) noexcept;
std::string_view to_string(TerminationReason r) noexcept;

struct HistoryPoint {
  std::int64_t trees_examined = 0;
  double score = 0.0;

  bool operator==(const HistoryPoint&) const = default;
};

struct SearchConfig {
  Termination termination = Termination::simple;
  /// Stop after this many examined trees without improvement. Under
  /// agreement termination the window is patience * r trees across all runs.
  std::int64_t patience = 100000;
  /// Hard budget on examined trees, checked between generations.
  std::optional<std::int64_t> max_trees;
  /// Number of agreement runs; select_r(n) when unset.
  std::optional<int> runs_r;
  /// Metropolis walk length; n when unset.
  std::optional<int> trial_length;
  /// Metropolis temperature on raw costs; (M - m) / C(n,4) when unset.
  std::optional<double> temperature;
  /// Upper bound on the simple mutations of one k-mutation; max(4, 5n-16)
  /// when unset.
  std::optional<std::int64_t> max_k;
  std::uint64_t seed = 0;
  ScorerKind scorer = ScorerKind::fast;
  SearchMode mode = SearchMode::hill_climb;
  /// Worker threads for agreement runs; results do not depend on it.
  int threads = 1;
  /// Called on every improvement of the overall best score.
  std::function<void(const HistoryPoint&)> on_improvement;
};

/// Throws invalid_input_error when a field is out of range.
void validate(const SearchConfig& config);

struct SearchResult {
  Tree best_tree;
  double best_score = 0.0;
  double best_cost = 0.0;
  std::int64_t trees_examined = 0;
  /// Strictly increasing best scores with the tree count at which each was
  /// reached; the first entry is the starting tree.
  std::vector<HistoryPoint> history;
  std::vector<std::uint64_t> per_run_seeds;
  TerminationReason terminated_by = TerminationReason::patience_exhausted;
  /// Starting tree of the reported run and the accepted mutations leading
  /// from it to best_tree.
  Tree initial_tree;
  std::vector<MutationRecord> trace;
  /// Counts of k-mutation lengths whose candidate was kept / discarded.
  std::map<std::int64_t, std::int64_t> accepted_k;
  std::map<std::int64_t, std::int64_t> rejected_k;
};

/// Bit-for-bit comparison of every result field.
bool identical(const SearchResult& a, const SearchResult& b);

/// Tree cost under a cost function with precomputed bounds.
class TreeScorer {
 public:
  /// The fast scorer needs a distance-backed cost function; explicit tables
  /// always use the naive sum.
  TreeScorer(const CostFunction& cf, ScorerKind kind);

  double cost(const Tree& tree) const;
  double score_of(double tree_cost) const noexcept { return score_from_cost(tree_cost, bounds_); }
  const ScoreBounds& bounds() const noexcept { return bounds_; }
  const CostFunction& cost_function() const noexcept { return *cf_; }
  bool uses_fast_path() const noexcept { return fast_; }

 private:
  const CostFunction* cf_;
  ScoreBounds bounds_;
  bool fast_;
};

/// Runs required under agreement termination: 6 for n <= 5, 5 up to 9,
/// 4 up to 15, 3 up to 17, 2 beyond. Throws invalid_size_error for n < 4.
int select_r(int n);

struct MetropolisParams {
  int trial_length = 1;
  double temperature = 1.0;
  std::int64_t max_k = 4;
  /// The walk stops as soon as a tree with this cost (or lower) is seen.
  double stop_cost = -std::numeric_limits<double>::infinity();
};

struct MetropolisOutcome {
  Tree best;
  double best_cost = 0.0;
  std::int64_t examined = 0;
  /// Accepted mutations leading from the start to `best`.
  std::vector<MutationRecord> path_to_best;
};

/// A Metropolis walk of `trial_length` steps from `start`. Each step applies
/// a k-mutation and keeps it if the raw cost does not increase, or with
/// probability exp(-increase / temperature); rejected steps are rolled back.
/// Returns the lowest-cost tree seen. Accepted and rejected step lengths are
/// counted into the optional maps.
MetropolisOutcome metropolis_trial(const Tree& start, double start_cost,
                                   const TreeScorer& scorer, const MetropolisParams& params,
                                   Rng& rng,
                                   std::map<std::int64_t, std::int64_t>* accepted_k = nullptr,
                                   std::map<std::int64_t, std::int64_t>* rejected_k = nullptr);

/// Randomised hill climbing from a random tree with the simple termination
/// condition: stop on S = 1, after `patience` trees without improvement, or
/// when `max_trees` is reached. Each generation is one k-mutation of the best
/// tree (hill_climb mode) or one Metropolis walk from it (metropolis mode).
SearchResult hill_climb(const CostFunction& cf, const SearchConfig& config);

/// r independently seeded runs advanced in lock-step rounds. Whenever a run
/// improves, all best scores are compared and, if equal, the trees; the
/// search ends when all r trees are identical, when any run reaches S = 1,
/// or on patience / max_trees exhaustion.
SearchResult run_with_agreement(const CostFunction& cf, const SearchConfig& config);

/// Dispatches on config.termination.
SearchResult search(const CostFunction& cf, const SearchConfig& config);

}  // namespace mqtc
