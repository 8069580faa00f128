#include "mqtc/search.hpp"

#include <algorithm>
#include <barrier>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "mqtc/error.hpp"
#include "mqtc/fast_cost.hpp"
#include "mqtc/fat_tail.hpp"
#include "mqtc/quartet.hpp"

namespace mqtc {

std::string_view to_string(Termination t) noexcept {
  return t == Termination::simple ? "simple" : "agreement";
}

std::string_view to_string(SearchMode m) noexcept {
  return m == SearchMode::hill_climb ? "hill_climb" : "metropolis";
}

std::string_view to_string(ScorerKind s) noexcept {
  return s == ScorerKind::naive ? "naive" : "fast";
}

std::string_view to_string(TerminationReason r) noexcept {
  switch (r) {
    case TerminationReason::perfect_score: return "perfect_score";
    case TerminationReason::patience_exhausted: return "patience_exhausted";
    case TerminationReason::max_trees_reached: return "max_trees_reached";
    case TerminationReason::agreement: return "agreement";
  }
  return "unknown";
}

void validate(const SearchConfig& c) {
  if (c.patience < 1) throw invalid_input_error("patience must be at least 1");
  if (c.max_trees && *c.max_trees < 1) throw invalid_input_error("max_trees must be at least 1");
  if (c.runs_r && *c.runs_r < 1) throw invalid_input_error("runs must be at least 1");
  if (c.trial_length && *c.trial_length < 1) {
    throw invalid_input_error("trial length must be at least 1");
  }
  if (c.temperature && !(*c.temperature > 0.0 && std::isfinite(*c.temperature))) {
    throw invalid_input_error("temperature must be positive and finite");
  }
  if (c.max_k && *c.max_k < 1) throw invalid_input_error("max_k must be at least 1");
  if (c.threads < 1) throw invalid_input_error("threads must be at least 1");
}

bool identical(const SearchResult& a, const SearchResult& b) {
  return a.best_tree.same_adjacency(b.best_tree) && a.best_score == b.best_score &&
         a.best_cost == b.best_cost && a.trees_examined == b.trees_examined &&
         a.history == b.history && a.per_run_seeds == b.per_run_seeds &&
         a.terminated_by == b.terminated_by && a.initial_tree.same_adjacency(b.initial_tree) &&
         a.trace == b.trace && a.accepted_k == b.accepted_k && a.rejected_k == b.rejected_k;
}

TreeScorer::TreeScorer(const CostFunction& cf, ScorerKind kind)
    : cf_(&cf), bounds_(mqtc::bounds(cf)),
      fast_(kind == ScorerKind::fast && cf.is_distance_backed()) {}

double TreeScorer::cost(const Tree& tree) const {
  return fast_ ? tree_cost_fast(tree, *cf_->distances()) : tree_cost_naive(tree, *cf_);
}

int select_r(int n) {
  if (n < 4) throw invalid_size_error("agreement termination needs at least 4 objects");
  if (n <= 5) return 6;
  if (n <= 9) return 5;
  if (n <= 15) return 4;
  if (n <= 17) return 3;
  return 2;
}

MetropolisOutcome metropolis_trial(const Tree& start, double start_cost,
                                   const TreeScorer& scorer, const MetropolisParams& params,
                                   Rng& rng, std::map<std::int64_t, std::int64_t>* accepted_k,
                                   std::map<std::int64_t, std::int64_t>* rejected_k) {
  MetropolisOutcome out{start, start_cost, 0, {}};
  if (start_cost <= params.stop_cost) return out;
  Tree current = start;
  double current_cost = start_cost;
  std::vector<MutationRecord> accepted;
  std::size_t best_prefix = 0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int step = 0; step < params.trial_length; ++step) {
    const std::int64_t k = std::min(sample_k(rng), params.max_k);
    const auto records = k_mutation(current, k, rng);
    const double cost = scorer.cost(current);
    ++out.examined;
    const double increase = cost - current_cost;
    if (increase <= 0.0 || unit(rng) < std::exp(-increase / params.temperature)) {
      if (accepted_k) ++(*accepted_k)[k];
      current_cost = cost;
      accepted.insert(accepted.end(), records.begin(), records.end());
      if (cost < out.best_cost) {
        out.best = current;
        out.best_cost = cost;
        best_prefix = accepted.size();
        if (cost <= params.stop_cost) break;
      }
    } else {
      if (rejected_k) ++(*rejected_k)[k];
      roll_back(current, records);
    }
  }
  accepted.resize(best_prefix);
  out.path_to_best = std::move(accepted);
  return out;
}

namespace {

struct ResolvedConfig {
  std::int64_t max_k;
  MetropolisParams metropolis;
};

ResolvedConfig resolve(const SearchConfig& config, const TreeScorer& scorer, int n) {
  ResolvedConfig r{};
  r.max_k = config.max_k.value_or(std::max<std::int64_t>(4, 5 * std::int64_t{n} - 16));
  r.metropolis.trial_length = config.trial_length.value_or(n);
  r.metropolis.max_k = r.max_k;
  const auto& b = scorer.bounds();
  double theta = (b.M - b.m) / static_cast<double>(choose(static_cast<std::uint64_t>(n), 4));
  if (!(theta > 0.0)) theta = 1.0;
  r.metropolis.temperature = config.temperature.value_or(theta);
  // Below m no tree exists; reaching m means S = 1.
  r.metropolis.stop_cost = b.m + b.tolerance;
  return r;
}

// One independent search run: its own stream, best tree and statistics.
class SearchRun {
 public:
  SearchRun(std::uint64_t seed, const TreeScorer& scorer, const ResolvedConfig& resolved,
            SearchMode mode, int n)
      : seed_(seed), rng_(seed), scorer_(&scorer), resolved_(&resolved), mode_(mode) {
    initial_ = random_tree(n, rng_);
    best_ = initial_;
    best_cost_ = scorer.cost(best_);
    best_score_ = scorer.score_of(best_cost_);
    examined_ = 1;
  }

  // One generation; returns true if the best tree improved.
  bool generation() {
    if (mode_ == SearchMode::hill_climb) {
      Tree candidate = best_;
      const std::int64_t k = std::min(sample_k(rng_), resolved_->max_k);
      auto records = k_mutation(candidate, k, rng_);
      const double cost = scorer_->cost(candidate);
      ++examined_;
      const double s = scorer_->score_of(cost);
      if (s > best_score_) {
        ++accepted_k_[k];
        accept(std::move(candidate), cost, s, records);
        return true;
      }
      ++rejected_k_[k];
      return false;
    }
    auto walk = metropolis_trial(best_, best_cost_, *scorer_, resolved_->metropolis, rng_,
                                 &accepted_k_, &rejected_k_);
    examined_ += walk.examined;
    const double s = scorer_->score_of(walk.best_cost);
    if (s > best_score_) {
      accept(std::move(walk.best), walk.best_cost, s, walk.path_to_best);
      return true;
    }
    return false;
  }

  std::uint64_t seed() const { return seed_; }
  const Tree& best() const { return best_; }
  double best_cost() const { return best_cost_; }
  double best_score() const { return best_score_; }
  std::int64_t examined() const { return examined_; }
  const std::string& canonical() {
    if (canonical_.empty()) canonical_ = canonical_form(best_);
    return canonical_;
  }

  void fill(SearchResult& result) const {
    result.best_tree = best_;
    result.best_cost = best_cost_;
    result.best_score = best_score_;
    result.initial_tree = initial_;
    result.trace = trace_;
    result.accepted_k = accepted_k_;
    result.rejected_k = rejected_k_;
  }

 private:
  void accept(Tree tree, double cost, double s, const std::vector<MutationRecord>& records) {
    best_ = std::move(tree);
    best_cost_ = cost;
    best_score_ = s;
    canonical_.clear();
    trace_.insert(trace_.end(), records.begin(), records.end());
  }

  std::uint64_t seed_;
  Rng rng_;
  const TreeScorer* scorer_;
  const ResolvedConfig* resolved_;
  SearchMode mode_;
  Tree initial_;
  Tree best_;
  double best_cost_ = 0.0;
  double best_score_ = 0.0;
  std::int64_t examined_ = 0;
  std::string canonical_;
  std::vector<MutationRecord> trace_;
  std::map<std::int64_t, std::int64_t> accepted_k_;
  std::map<std::int64_t, std::int64_t> rejected_k_;
};

// Runs body(i), i in [0, count), once per round on a fixed set of workers.
// Run i is always handled by worker i % threads, so results never depend on
// scheduling.
class RoundPool {
 public:
  RoundPool(int threads, int count)
      : threads_(std::clamp(threads, 1, count)), count_(count),
        start_(threads_), done_(threads_) {
    for (int t = 1; t < threads_; ++t) {
      workers_.emplace_back([this, t] {
        for (;;) {
          start_.arrive_and_wait();
          if (stop_) return;
          work(t);
          done_.arrive_and_wait();
        }
      });
    }
  }

  ~RoundPool() {
    if (threads_ > 1) {
      stop_ = true;
      start_.arrive_and_wait();
    }
  }

  RoundPool(const RoundPool&) = delete;
  RoundPool& operator=(const RoundPool&) = delete;

  template <typename Body>
  void run_round(Body&& body) {
    std::function<void(int)> fn = std::forward<Body>(body);
    body_ = &fn;
    if (threads_ > 1) start_.arrive_and_wait();
    work(0);
    if (threads_ > 1) done_.arrive_and_wait();
    if (error_) std::rethrow_exception(std::exchange(error_, nullptr));
  }

 private:
  void work(int t) {
    try {
      for (int i = t; i < count_; i += threads_) (*body_)(i);
    } catch (...) {
      const std::lock_guard lock(error_mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }

  int threads_;
  int count_;
  std::barrier<> start_;
  std::barrier<> done_;
  std::vector<std::jthread> workers_;
  const std::function<void(int)>* body_ = nullptr;
  bool stop_ = false;
  std::mutex error_mutex_;
  std::exception_ptr error_;
};

void record_improvement(SearchResult& result, const SearchConfig& config,
                        std::int64_t examined, double s) {
  result.history.push_back({examined, s});
  if (config.on_improvement) config.on_improvement(result.history.back());
}

}  // namespace

SearchResult hill_climb(const CostFunction& cf, const SearchConfig& config) {
  validate(config);
  const int n = cf.leaf_count();
  const TreeScorer scorer(cf, config.scorer);
  const ResolvedConfig resolved = resolve(config, scorer, n);
  SearchRun run(derive_seed(config.seed, 0), scorer, resolved, config.mode, n);

  SearchResult result;
  result.per_run_seeds = {run.seed()};
  record_improvement(result, config, run.examined(), run.best_score());
  std::int64_t last_improvement = run.examined();
  for (;;) {
    if (run.best_score() == 1.0) {
      result.terminated_by = TerminationReason::perfect_score;
      break;
    }
    if (config.max_trees && run.examined() >= *config.max_trees) {
      result.terminated_by = TerminationReason::max_trees_reached;
      break;
    }
    if (run.examined() - last_improvement >= config.patience) {
      result.terminated_by = TerminationReason::patience_exhausted;
      break;
    }
    if (run.generation()) {
      last_improvement = run.examined();
      record_improvement(result, config, run.examined(), run.best_score());
    }
  }
  run.fill(result);
  result.trees_examined = run.examined();
  return result;
}

SearchResult run_with_agreement(const CostFunction& cf, const SearchConfig& config) {
  validate(config);
  const int n = cf.leaf_count();
  const int r = config.runs_r.value_or(select_r(n));
  const TreeScorer scorer(cf, config.scorer);
  const ResolvedConfig resolved = resolve(config, scorer, n);

  std::vector<SearchRun> runs;
  runs.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    runs.emplace_back(derive_seed(config.seed, static_cast<std::uint64_t>(i)), scorer, resolved,
                      config.mode, n);
  }
  auto total_examined = [&] {
    std::int64_t total = 0;
    for (const auto& run : runs) total += run.examined();
    return total;
  };
  auto best_run = [&]() -> SearchRun& {
    return *std::max_element(runs.begin(), runs.end(), [](const auto& a, const auto& b) {
      return a.best_score() < b.best_score();
    });
  };

  SearchResult result;
  for (const auto& run : runs) result.per_run_seeds.push_back(run.seed());
  double global_best = best_run().best_score();
  record_improvement(result, config, total_examined(), global_best);
  std::int64_t last_improvement = total_examined();
  const std::int64_t window = config.patience * r;

  // A run that starts at S = 1 ends the search before any round.
  SearchRun* winner = nullptr;
  for (auto& run : runs) {
    if (run.best_score() == 1.0) {
      winner = &run;
      result.terminated_by = TerminationReason::perfect_score;
      break;
    }
  }

  RoundPool pool(config.threads, r);
  std::vector<char> improved(static_cast<std::size_t>(r), 0);
  while (winner == nullptr) {
    pool.run_round([&](int i) {
      improved[static_cast<std::size_t>(i)] = runs[static_cast<std::size_t>(i)].generation();
    });
    const std::int64_t total = total_examined();
    double round_best = global_best;
    for (const auto& run : runs) round_best = std::max(round_best, run.best_score());
    if (round_best > global_best) {
      global_best = round_best;
      record_improvement(result, config, total, global_best);
    }
    for (int i = 0; i < r && winner == nullptr; ++i) {
      if (!improved[static_cast<std::size_t>(i)]) continue;
      SearchRun& run = runs[static_cast<std::size_t>(i)];
      last_improvement = total;
      if (run.best_score() == 1.0) {
        winner = &run;
        result.terminated_by = TerminationReason::perfect_score;
        break;
      }
      const bool scores_agree = std::all_of(runs.begin(), runs.end(), [&](const auto& other) {
        return other.best_score() == run.best_score();
      });
      if (scores_agree &&
          std::all_of(runs.begin(), runs.end(),
                      [&](auto& other) { return other.canonical() == run.canonical(); })) {
        winner = &run;
        result.terminated_by = TerminationReason::agreement;
      }
    }
    if (winner) break;
    if (config.max_trees && total >= *config.max_trees) {
      winner = &best_run();
      result.terminated_by = TerminationReason::max_trees_reached;
    } else if (total - last_improvement >= window) {
      winner = &best_run();
      result.terminated_by = TerminationReason::patience_exhausted;
    }
  }
  winner->fill(result);
  result.trees_examined = total_examined();
  return result;
}

SearchResult search(const CostFunction& cf, const SearchConfig& config) {
  return config.termination == Termination::simple ? hill_climb(cf, config)
                                                   : run_with_agreement(cf, config);
}

}  // namespace mqtc
