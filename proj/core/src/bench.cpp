#include "mqtc/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "mqtc/cost.hpp"
#include "mqtc/error.hpp"
#include "mqtc/fat_tail.hpp"
#include "mqtc/matrix_io.hpp"
#include "mqtc/mutation.hpp"
#include "mqtc/quartet.hpp"
#include "mqtc/tree_io.hpp"

namespace mqtc {

DistanceMatrix path_length_matrix(const Tree& tree) {
  const int n = tree.leaf_count();
  const auto lengths = leaf_path_lengths(tree);
  std::vector<double> values(lengths.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = lengths[i] == 0 ? 0.0 : static_cast<double>(lengths[i] + 1) / n;
  }
  return DistanceMatrix(static_cast<std::size_t>(n), std::move(values));
}

ArtificialInstance generate_artificial(int n, std::int64_t num_mutations, Rng& rng) {
  if (num_mutations < 0) throw invalid_input_error("mutation count must be nonnegative");
  Tree tree = caterpillar_tree(n);
  const std::int64_t max_k = std::max<std::int64_t>(4, 5 * std::int64_t{n} - 16);
  for (std::int64_t i = 0; i < num_mutations; ++i) {
    k_mutation(tree, std::min(sample_k(rng), max_k), rng);
  }
  auto matrix = path_length_matrix(tree);
  return {std::move(tree), std::move(matrix)};
}

TrialReport reconstruction_trial(int trial_id, int n, std::int64_t num_mutations,
                                 SearchConfig config, std::uint64_t seed) {
  Rng rng(seed);
  auto instance = generate_artificial(n, num_mutations, rng);
  config.seed = derive_seed(seed, 1);
  const auto cf = CostFunction::from_distances(instance.matrix);

  const auto start = std::chrono::steady_clock::now();
  SearchResult result = search(cf, config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  TrialReport report;
  report.trial_id = trial_id;
  report.seed = seed;
  report.planted = std::move(instance.tree);
  report.recovered = result.best_tree;
  report.exact = trees_equal(report.planted, report.recovered);
  report.s_score = result.best_score;
  report.trees_examined = result.trees_examined;
  report.wall_seconds = elapsed.count();
  report.search = std::move(result);
  return report;
}

std::vector<TrialReport> reconstruction_trials(int count, int n, std::int64_t num_mutations,
                                               const SearchConfig& config,
                                               std::uint64_t master_seed, int threads) {
  std::vector<TrialReport> reports(static_cast<std::size_t>(std::max(0, count)));
  auto run = [&](int id) {
    reports[static_cast<std::size_t>(id)] = reconstruction_trial(
        id, n, num_mutations, config, derive_seed(master_seed, static_cast<std::uint64_t>(id)));
  };
  if (threads <= 1 || count <= 1) {
    for (int id = 0; id < count; ++id) run(id);
    return reports;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < std::min(threads, count); ++w) {
      pool.emplace_back([&] {
        for (int id; (id = next.fetch_add(1)) < count;) {
          try {
            run(id);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

std::string to_json_line(const TrialReport& r) {
  nlohmann::ordered_json j;
  j["trial_id"] = r.trial_id;
  j["seed"] = r.seed;
  j["n"] = r.planted.leaf_count();
  j["planted"] = to_newick(r.planted);
  j["recovered"] = to_newick(r.recovered);
  j["exact"] = r.exact;
  j["s_score"] = r.s_score;
  j["trees_examined"] = r.trees_examined;
  j["wall_seconds"] = r.wall_seconds;
  return j.dump();
}

double room_for_improvement(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw invalid_input_error("score must lie in [0, 1]");
  return 1.0 - s;
}

double db_gain(double r_other, double r_ours) {
  if (!(r_other >= 0.0) || !(r_ours >= 0.0)) {
    throw invalid_input_error("room for improvement must be nonnegative");
  }
  if (r_ours == 0.0) return r_other == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  if (r_other == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(r_other / r_ours);
}

namespace {

std::vector<KMass> normalized(const std::map<std::int64_t, std::int64_t>& counts) {
  std::int64_t total = 0;
  for (const auto& [k, c] : counts) total += c;
  std::vector<KMass> out;
  for (const auto& [k, c] : counts) {
    out.push_back({k, c, static_cast<double>(c) / static_cast<double>(total)});
  }
  return out;
}

std::string with_preamble(const std::string& preamble) {
  if (preamble.empty()) return {};
  std::string out;
  std::size_t pos = 0;
  while (pos < preamble.size()) {
    std::size_t end = preamble.find('\n', pos);
    if (end == std::string::npos) end = preamble.size();
    out += "# " + preamble.substr(pos, end - pos) + "\n";
    pos = end + 1;
  }
  return out;
}

}  // namespace

RunStatistics run_statistics(std::span<const SearchResult> runs, std::int64_t bin_width) {
  if (runs.empty()) throw invalid_input_error("statistics need at least one run");
  if (bin_width < 1) throw invalid_input_error("bin width must be positive");
  RunStatistics stats;
  stats.bin_width = bin_width;

  std::int64_t max_examined = 0;
  for (const auto& r : runs) max_examined = std::max(max_examined, r.trees_examined);
  stats.trees_examined.resize(static_cast<std::size_t>(max_examined / bin_width + 1));
  for (std::size_t b = 0; b < stats.trees_examined.size(); ++b) {
    stats.trees_examined[b].lower = static_cast<std::int64_t>(b) * bin_width;
  }
  std::map<std::int64_t, std::int64_t> accepted;
  std::map<std::int64_t, std::int64_t> rejected;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    ++stats.trees_examined[static_cast<std::size_t>(r.trees_examined / bin_width)].count;
    for (const auto& [k, c] : r.accepted_k) accepted[k] += c;
    for (const auto& [k, c] : r.rejected_k) rejected[k] += c;
    for (const auto& h : r.history) {
      stats.progress.push_back({static_cast<int>(i), h.trees_examined, h.score});
    }
  }
  for (auto& bin : stats.trees_examined) {
    bin.fraction = static_cast<double>(bin.count) / static_cast<double>(runs.size());
  }
  stats.accepted_k = normalized(accepted);
  stats.rejected_k = normalized(rejected);
  return stats;
}

RunStatistics run_statistics(std::span<const TrialReport> reports, std::int64_t bin_width) {
  std::vector<SearchResult> runs;
  runs.reserve(reports.size());
  for (const auto& r : reports) runs.push_back(r.search);
  return run_statistics(std::span<const SearchResult>(runs), bin_width);
}

std::string histogram_csv(const RunStatistics& stats, const std::string& preamble) {
  std::string out = with_preamble(preamble) + "bin_lower,bin_upper,count,fraction\n";
  for (const auto& b : stats.trees_examined) {
    out += std::to_string(b.lower) + "," + std::to_string(b.lower + stats.bin_width) + "," +
           std::to_string(b.count) + "," + format_real(b.fraction) + "\n";
  }
  return out;
}

std::string k_pmf_csv(const RunStatistics& stats, const std::string& preamble) {
  std::string out = with_preamble(preamble) + "outcome,k,count,probability\n";
  for (const auto& m : stats.accepted_k) {
    out += "accepted," + std::to_string(m.k) + "," + std::to_string(m.count) + "," +
           format_real(m.probability) + "\n";
  }
  for (const auto& m : stats.rejected_k) {
    out += "rejected," + std::to_string(m.k) + "," + std::to_string(m.count) + "," +
           format_real(m.probability) + "\n";
  }
  return out;
}

std::string progress_csv(const RunStatistics& stats, const std::string& preamble) {
  std::string out = with_preamble(preamble) + "run,trees_examined,score\n";
  for (const auto& p : stats.progress) {
    out += std::to_string(p.run) + "," + std::to_string(p.trees_examined) + "," +
           format_real(p.score) + "\n";
  }
  return out;
}

}  // namespace mqtc
