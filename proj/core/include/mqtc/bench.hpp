#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mqtc/distance_matrix.hpp"
#include "mqtc/random.hpp"
#include "mqtc/search.hpp"
#include "mqtc/tree.hpp"

namespace mqtc {

struct ArtificialInstance {
  Tree tree;
  DistanceMatrix matrix;
};

/// d(a, b) = (L(a, b) + 1) / n for a != b, where L counts edges on the
/// path; names are "0".."n-1".
DistanceMatrix path_length_matrix(const Tree& tree);

/// Caterpillar scrambled by `num_mutations` k-mutations (k capped at
/// max(4, 5n-16), enough to reach any tree), with its
/// path-length matrix. Throws invalid_size_error for n < 4 and
/// invalid_input_error for a negative mutation count.
ArtificialInstance generate_artificial(int n, std::int64_t num_mutations, Rng& rng);

struct TrialReport {
  int trial_id = 0;
  /// Seeds the planted tree; the search uses derive_seed(seed, 1).
  std::uint64_t seed = 0;
  Tree planted;
  Tree recovered;
  bool exact = false;
  double s_score = 0.0;
  std::int64_t trees_examined = 0;
  double wall_seconds = 0.0;
  SearchResult search;
};

/// Plants a tree from `seed`, searches its matrix with `config` (whose seed
/// is replaced) and compares.
TrialReport reconstruction_trial(int trial_id, int n, std::int64_t num_mutations,
                                 SearchConfig config, std::uint64_t seed);

/// Trials 0..count-1 with seeds derive_seed(master_seed, id), run on up to
/// `threads` workers; reports come back in id order.
std::vector<TrialReport> reconstruction_trials(int count, int n, std::int64_t num_mutations,
                                               const SearchConfig& config,
                                               std::uint64_t master_seed, int threads = 1);

/// One JSON object with fields in a fixed order: trial_id, seed, n,
/// planted, recovered, exact, s_score, trees_examined, wall_seconds.
std::string to_json_line(const TrialReport& report);

/// R = 1 - S. Throws invalid_input_error outside [0, 1].
double room_for_improvement(double s);

/// 10 log10(r_other / r_ours). +infinity when only r_ours is zero,
/// -infinity when only r_other is zero, 0 when both are. Throws
/// invalid_input_error for negative arguments.
double db_gain(double r_other, double r_ours);

struct HistogramBin {
  std::int64_t lower = 0;
  std::int64_t count = 0;
  double fraction = 0.0;
};

struct KMass {
  std::int64_t k = 0;
  std::int64_t count = 0;
  double probability = 0.0;
};

struct ProgressPoint {
  int run = 0;
  std::int64_t trees_examined = 0;
  double score = 0.0;
};

struct RunStatistics {
  std::int64_t bin_width = 1000;
  std::vector<HistogramBin> trees_examined;
  std::vector<KMass> accepted_k;
  std::vector<KMass> rejected_k;
  std::vector<ProgressPoint> progress;
};

/// Trees-examined histogram (empty bins included), accepted and rejected
/// k-mutation length pmfs, and the score history of every run. Throws
/// invalid_input_error for an empty input or a nonpositive bin width.
RunStatistics run_statistics(std::span<const SearchResult> runs, std::int64_t bin_width = 1000);
RunStatistics run_statistics(std::span<const TrialReport> reports, std::int64_t bin_width = 1000);

/// CSV tables with a header row, each preceded by the given '#' comment
/// lines (empty for none).
std::string histogram_csv(const RunStatistics& stats, const std::string& preamble = {});
std::string k_pmf_csv(const RunStatistics& stats, const std::string& preamble = {});
std::string progress_csv(const RunStatistics& stats, const std::string& preamble = {});

}  // namespace mqtc
