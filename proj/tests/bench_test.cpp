#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include <json.hpp>

#include "mqtc/bench.hpp"
#include "mqtc/error.hpp"
#include "mqtc/quartet.hpp"
#include "oracles.hpp"

using namespace mqtc;

TEST(PathLengthMatrix, MatchesEdgeCounts) {
  Rng rng(81);
  for (int n : {4, 9, 17}) {
    const Tree t = random_tree(n, rng);
    const auto dm = path_length_matrix(t);
    const auto dist = oracle::all_distances(t);
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(dm(static_cast<std::size_t>(a), static_cast<std::size_t>(a)), 0.0);
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const double v = dm(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        EXPECT_EQ(v, (dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] + 1.0) / n);
        EXPECT_GT(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
    }
  }
  const auto cat = path_length_matrix(caterpillar_tree(32));
  EXPECT_EQ(cat(0, 1), 0.09375);
  EXPECT_LT(cat(0, 2), cat(0, 3));
  EXPECT_LT(cat(0, 3), cat(0, 31));
}

TEST(Artificial, ZeroMutationsGiveTheCaterpillar) {
  Rng rng(82);
  const auto inst = generate_artificial(10, 0, rng);
  EXPECT_TRUE(trees_equal(inst.tree, caterpillar_tree(10)));
  SearchConfig c;
  const auto r = search(CostFunction::from_distances(inst.matrix), c);
  EXPECT_EQ(r.best_score, 1.0);
  EXPECT_TRUE(trees_equal(r.best_tree, inst.tree));
  EXPECT_THROW(generate_artificial(10, -1, rng), invalid_input_error);
  EXPECT_THROW(generate_artificial(3, 5, rng), invalid_size_error);
}

TEST(Artificial, ScrambledTreesAreValid) {
  Rng rng(83);
  for (int rep = 0; rep < 20; ++rep) {
    const auto inst = generate_artificial(12, 50, rng);
    EXPECT_NO_THROW(inst.tree.validate());
    EXPECT_EQ(inst.matrix, path_length_matrix(inst.tree));
  }
}

TEST(Reconstruction, ExactRecoveryMeansPerfectScore) {
  SearchConfig c;
  const auto reports = reconstruction_trials(6, 12, 100, c, 5, 3);
  ASSERT_EQ(reports.size(), 6u);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    EXPECT_EQ(r.trial_id, static_cast<int>(i));
    EXPECT_EQ(r.seed, derive_seed(5, i));
    EXPECT_EQ(r.exact, trees_equal(r.planted, r.recovered));
    if (r.exact) EXPECT_EQ(r.s_score, 1.0);
    EXPECT_TRUE(r.exact);
  }
  const auto single = reconstruction_trial(2, 12, 100, c, derive_seed(5, 2));
  EXPECT_TRUE(identical(single.search, reports[2].search));
}

TEST(Reconstruction, JsonLineFieldOrder) {
  SearchConfig c;
  const auto r = reconstruction_trial(3, 8, 20, c, 77);
  const std::string line = to_json_line(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto j = nlohmann::ordered_json::parse(line);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"trial_id", "seed", "n", "planted", "recovered", "exact",
                                            "s_score", "trees_examined", "wall_seconds"}));
  EXPECT_EQ(j["trial_id"], 3);
  EXPECT_EQ(j["seed"], 77u);
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["trees_examined"], r.trees_examined);
}

TEST(Metrics, DecibelGain) {
  EXPECT_NEAR(db_gain(0.010, 0.005), 3.0103, 1e-4);
  EXPECT_NEAR(db_gain(std::pow(10.0, 0.1), 1.0), 1.0, 1e-12);
  EXPECT_NEAR(std::pow(10.0, 0.1), 1.2589, 1e-4);
  EXPECT_EQ(db_gain(0.5, 0.5), 0.0);
  EXPECT_LT(db_gain(0.005, 0.010), 0.0);
  EXPECT_EQ(db_gain(0.1, 0.0), std::numeric_limits<double>::infinity());
  EXPECT_EQ(db_gain(0.0, 0.1), -std::numeric_limits<double>::infinity());
  EXPECT_EQ(db_gain(0.0, 0.0), 0.0);
  EXPECT_THROW(db_gain(-0.1, 0.1), invalid_input_error);
  EXPECT_EQ(room_for_improvement(0.75), 0.25);
  EXPECT_EQ(room_for_improvement(1.0), 0.0);
  EXPECT_THROW(room_for_improvement(1.5), invalid_input_error);
  EXPECT_THROW(room_for_improvement(-0.1), invalid_input_error);
}

TEST(RunStatistics, Normalization) {
  SearchConfig c;
  c.mode = SearchMode::metropolis;
  const auto reports = reconstruction_trials(8, 10, 50, c, 9);
  const auto stats = run_statistics(std::span<const TrialReport>(reports), 100);
  double hist = 0.0;
  std::int64_t count = 0;
  for (std::size_t b = 0; b < stats.trees_examined.size(); ++b) {
    EXPECT_EQ(stats.trees_examined[b].lower, static_cast<std::int64_t>(b) * 100);
    hist += stats.trees_examined[b].fraction;
    count += stats.trees_examined[b].count;
  }
  EXPECT_NEAR(hist, 1.0, 1e-12);
  EXPECT_EQ(count, 8);
  for (const auto* pmf : {&stats.accepted_k, &stats.rejected_k}) {
    double total = 0.0;
    for (const auto& m : *pmf) total += m.probability;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
  std::size_t points = 0;
  for (const auto& r : reports) points += r.search.history.size();
  EXPECT_EQ(stats.progress.size(), points);
  EXPECT_THROW(run_statistics(std::span<const TrialReport>(), 100), invalid_input_error);
  EXPECT_THROW(run_statistics(std::span<const TrialReport>(reports), 0), invalid_input_error);
}

TEST(RunStatistics, SingleRunGivesSingleBars) {
  SearchConfig c;
  const auto report = reconstruction_trial(0, 8, 20, c, 3);
  const auto stats = run_statistics(std::span<const TrialReport>(&report, 1), 10);
  std::size_t nonzero = 0;
  for (const auto& b : stats.trees_examined) {
    if (b.count > 0) {
      ++nonzero;
      EXPECT_EQ(b.fraction, 1.0);
      EXPECT_LE(b.lower, report.trees_examined);
      EXPECT_GT(b.lower + 10, report.trees_examined);
    }
  }
  EXPECT_EQ(nonzero, 1u);
  const std::string csv = histogram_csv(stats, "first\nsecond");
  EXPECT_EQ(csv.rfind("# first\n# second\nbin_lower,bin_upper,count,fraction\n", 0), 0u);
  EXPECT_EQ(k_pmf_csv(stats).rfind("outcome,k,count,probability\n", 0), 0u);
  EXPECT_EQ(progress_csv(stats).rfind("run,trees_examined,score\n", 0), 0u);
}
