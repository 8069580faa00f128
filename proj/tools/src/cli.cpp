#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mqtc/bench.hpp"
#include "mqtc/cost.hpp"
#include "mqtc/error.hpp"
#include "mqtc/matrix_io.hpp"
#include "mqtc/ncd.hpp"
#include "mqtc/search.hpp"
#include "mqtc/tree_io.hpp"

#ifndef MQTC_VERSION
#define MQTC_VERSION "0.0.0"
#endif

namespace mqtc::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int result_schema_version = 1;

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input_error("cannot write " + path.string());
  out << text;
  if (!out) throw invalid_input_error("error while writing " + path.string());
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Manifest {
  std::string command;
  std::vector<std::string> arguments;
  std::uint64_t seed = 0;
  json config = json::object();
  json inputs = json::array();

  void add_input(const fs::path& path, std::string_view bytes) {
    inputs.push_back({{"path", path.string()}, {"fnv1a64", hex64(fnv1a64(bytes))}});
  }

  json to_json() const {
    return {{"tool", "mqtc"},          {"version", std::string(version())},
            {"command", command},      {"arguments", arguments},
            {"seed", seed},            {"config", config},
            {"inputs", inputs}};
  }

  // One line naming the seed and configuration, for file headers.
  std::string header() const {
    return "mqtc " + std::string(version()) + " " + command + " seed=" + std::to_string(seed) +
           " config=" + config.dump();
  }
};

// ----------------------------------------------------------- search flags

struct SearchFlags {
  std::uint64_t seed = 0;
  std::string termination = "simple";
  std::int64_t patience = 100000;
  std::int64_t max_trees = 0;
  std::string mode = "hill";
  std::string scorer = "fast";
  int runs = 0;
  int trial_length = 0;
  double temperature = 0.0;
  std::int64_t max_k = 0;
  int threads = 1;

  CLI::Option* max_trees_opt = nullptr;
  CLI::Option* runs_opt = nullptr;
  CLI::Option* trial_length_opt = nullptr;
  CLI::Option* temperature_opt = nullptr;
  CLI::Option* max_k_opt = nullptr;

  void add_to(CLI::App* app, const std::string& runs_flag = "--runs") {
    app->add_option("--seed", seed, "Master random seed")->capture_default_str();
    app->add_option("--termination", termination, "Termination condition")
        ->check(CLI::IsMember({"simple", "agreement"}))
        ->capture_default_str();
    app->add_option("--patience", patience, "Trees examined without improvement before stopping")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    max_trees_opt = app->add_option("--max-trees", max_trees, "Hard budget of examined trees")
                        ->check(CLI::PositiveNumber);
    app->add_option("--mode", mode, "Generation type")
        ->check(CLI::IsMember({"hill", "metropolis"}))
        ->capture_default_str();
    app->add_option("--scorer", scorer, "Tree cost evaluation")
        ->check(CLI::IsMember({"naive", "fast"}))
        ->capture_default_str();
    runs_opt = app->add_option(runs_flag, runs, "Agreement runs (default from the object count)")
                   ->check(CLI::PositiveNumber);
    trial_length_opt =
        app->add_option("--trial-length", trial_length, "Metropolis walk length (default n)")
            ->check(CLI::PositiveNumber);
    temperature_opt =
        app->add_option("--temperature", temperature,
                        "Metropolis temperature on raw costs (default (M-m)/C(n,4))")
            ->check(CLI::PositiveNumber);
    max_k_opt = app->add_option("--max-k", max_k,
                                "Cap on simple mutations per k-mutation (default max(4,5n-16))")
                    ->check(CLI::PositiveNumber);
    app->add_option("--threads", threads, "Worker threads; results do not depend on it")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  SearchConfig config() const {
    SearchConfig c;
    c.seed = seed;
    c.termination = termination == "agreement" ? Termination::agreement : Termination::simple;
    c.patience = patience;
    if (max_trees_opt->count()) c.max_trees = max_trees;
    c.mode = mode == "metropolis" ? SearchMode::metropolis : SearchMode::hill_climb;
    c.scorer = scorer == "naive" ? ScorerKind::naive : ScorerKind::fast;
    if (runs_opt->count()) c.runs_r = runs;
    if (trial_length_opt->count()) c.trial_length = trial_length;
    if (temperature_opt->count()) c.temperature = temperature;
    if (max_k_opt->count()) c.max_k = max_k;
    c.threads = threads;
    return c;
  }
};

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json config_json(const SearchConfig& c) {
  return {{"termination", std::string(to_string(c.termination))},
          {"patience", c.patience},
          {"max_trees", optional_json(c.max_trees)},
          {"mode", std::string(to_string(c.mode))},
          {"scorer", std::string(to_string(c.scorer))},
          {"runs", optional_json(c.runs_r)},
          {"trial_length", optional_json(c.trial_length)},
          {"temperature", optional_json(c.temperature)},
          {"max_k", optional_json(c.max_k)},
          {"threads", c.threads}};
}

json history_json(const std::vector<HistoryPoint>& history) {
  json out = json::array();
  for (const auto& h : history) {
    out.push_back({{"trees_examined", h.trees_examined}, {"score", h.score}});
  }
  return out;
}

std::optional<MatrixFormat> format_flag(const std::string& name) {
  if (name == "auto") return std::nullopt;
  return parse_matrix_format(name);
}

struct LoadedMatrix {
  DistanceMatrix matrix;
  std::string bytes;
};

LoadedMatrix load_matrix(const fs::path& path, const std::string& format) {
  std::string bytes = read_text(path);
  const auto f = format_flag(format).value_or(detect_matrix_format(bytes));
  auto matrix = read_matrix(bytes, f);
  if (matrix.size() < 4) {
    throw invalid_size_error("clustering needs at least 4 objects, the matrix has " +
                             std::to_string(matrix.size()));
  }
  return {std::move(matrix), std::move(bytes)};
}

// Runs `task(i)` for i in [0, count) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& task) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < std::min(threads, count); ++w) {
      pool.emplace_back([&] {
        for (int i; (i = next.fetch_add(1)) < count;) {
          try {
            task(i);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------- cluster

struct ClusterFlags {
  std::string matrix_path;
  std::string input_format = "auto";
  std::string out_dir = ".";
  bool verbose = false;
  SearchFlags search;
};

int cmd_cluster(const ClusterFlags& f, const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  const auto loaded = load_matrix(f.matrix_path, f.input_format);
  const auto& dm = loaded.matrix;
  SearchConfig config = f.search.config();
  validate(config);
  if (f.verbose) {
    config.on_improvement = [&err](const HistoryPoint& h) {
      err << "trees " << h.trees_examined << "  S(T) " << format_real(h.score) << "\n";
    };
  }

  Manifest manifest;
  manifest.command = "cluster";
  manifest.arguments = args;
  manifest.seed = config.seed;
  manifest.config = config_json(config);
  manifest.add_input(f.matrix_path, loaded.bytes);

  const auto cf = CostFunction::from_distances(dm);
  const auto start = std::chrono::steady_clock::now();
  const SearchResult result = search(cf, config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const fs::path dir(f.out_dir);
  fs::create_directories(dir);
  const std::string newick = to_newick(result.best_tree, dm.names());
  write_text(dir / "tree.newick", "[" + manifest.header() + "]\n" + newick + "\n");
  write_text(dir / "tree.dot", "// " + manifest.header() + "\n" + to_dot(result.best_tree, dm.names()));

  std::string progress = "# " + manifest.header() + "\ntrees_examined\tscore\n";
  for (const auto& h : result.history) {
    progress += std::to_string(h.trees_examined) + "\t" + format_real(h.score) + "\n";
  }
  write_text(dir / "progress.tsv", progress);

  std::string trace = "# " + manifest.header() +
                      "\n# starting tree as node-id edges (leaf i is matrix row i), then the "
                      "accepted mutations\nedges";
  for (const auto& [a, b] : result.initial_tree.edges()) {
    trace += " " + std::to_string(a) + "-" + std::to_string(b);
  }
  trace += "\n";
  for (const auto& r : result.trace) trace += r.to_string() + "\n";
  write_text(dir / "trace.txt", trace);

  const auto b = bounds(cf);
  json seeds = json::array();
  for (const auto s : result.per_run_seeds) seeds.push_back(s);
  const json doc = {{"schema_version", result_schema_version},
                    {"manifest", manifest.to_json()},
                    {"n", dm.size()},
                    {"names", dm.names()},
                    {"score", result.best_score},
                    {"cost", result.best_cost},
                    {"m", b.m},
                    {"M", b.M},
                    {"trees_examined", result.trees_examined},
                    {"terminated_by", std::string(to_string(result.terminated_by))},
                    {"per_run_seeds", seeds},
                    {"newick", newick},
                    {"history", history_json(result.history)},
                    {"history_path", "progress.tsv"},
                    {"trace_path", "trace.txt"},
                    {"wall_seconds", elapsed.count()}};
  write_text(dir / "result.json", doc.dump(2) + "\n");

  out << "S(T) " << format_real(result.best_score) << "\n"
      << "trees_examined " << result.trees_examined << "\n"
      << "terminated_by " << to_string(result.terminated_by) << "\n"
      << "newick " << newick << "\n";
  return exit_ok;
}

// -------------------------------------------------------------------- ncd

struct NcdFlags {
  std::string corpus;
  std::string format = "csv";
  std::string compressor = "zlib";
  std::string output;
  int threads = 1;
};

int cmd_ncd(const NcdFlags& f, const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const auto items = load_corpus(f.corpus);
  const auto z = make_compressor(f.compressor);
  NcdMatrixOptions options;
  options.threads = f.threads;
  options.on_warning = [&err](const std::string& m) { err << "warning: " << m << "\n"; };
  const auto dm = ncd_matrix(items, *z, options);
  const std::string text = write_matrix(dm, *parse_matrix_format(f.format));
  if (f.output.empty()) {
    out << text;
    return exit_ok;
  }
  write_text(f.output, text);

  Manifest manifest;
  manifest.command = "ncd";
  manifest.arguments = args;
  manifest.config = {{"compressor", z->name()}, {"format", f.format}};
  for (const auto& item : items) {
    manifest.add_input(item.name, {reinterpret_cast<const char*>(item.bytes.data()), item.bytes.size()});
  }
  write_text(f.output + ".manifest.json", manifest.to_json().dump(2) + "\n");
  return exit_ok;
}

// ------------------------------------------------------------------ score

struct ScoreFlags {
  std::string matrix_path;
  std::string tree_path;
  std::string compare_path;
  std::string input_format = "auto";
  std::string scorer = "fast";
};

int cmd_score(const ScoreFlags& f, std::ostream& out) {
  const auto loaded = load_matrix(f.matrix_path, f.input_format);
  const auto& dm = loaded.matrix;
  const auto cf = CostFunction::from_distances(dm);
  const TreeScorer scorer(cf, f.scorer == "naive" ? ScorerKind::naive : ScorerKind::fast);

  const Tree tree = from_newick(read_text(f.tree_path), dm.names());
  const double cost = scorer.cost(tree);
  const double s = scorer.score_of(cost);
  const double r = room_for_improvement(s);
  out << "C_T " << format_real(cost) << "\n"
      << "m " << format_real(scorer.bounds().m) << "\n"
      << "M " << format_real(scorer.bounds().M) << "\n"
      << "S " << format_real(s) << "\n"
      << "R " << format_real(r) << "\n";
  if (!f.compare_path.empty()) {
    const Tree other = from_newick(read_text(f.compare_path), dm.names());
    const double s_other = scorer.score_of(scorer.cost(other));
    const double r_other = room_for_improvement(s_other);
    const double db = db_gain(r_other, r);
    out << "S_other " << format_real(s_other) << "\n"
        << "R_other " << format_real(r_other) << "\n"
        << "db_gain " << (std::isfinite(db) ? format_real(db) : (db > 0 ? "inf" : "-inf"))
        << "\n";
  }
  return exit_ok;
}

// ------------------------------------------------------------------ bench

struct ArtificialFlags {
  int n = 16;
  int trials = 20;
  std::int64_t mutations = -1;
  std::string out_dir = ".";
  SearchFlags search;
};

int cmd_bench_artificial(const ArtificialFlags& f, const std::vector<std::string>& args,
                         std::ostream& out) {
  SearchConfig config = f.search.config();
  validate(config);
  const int trial_threads = config.threads;
  config.threads = 1;
  const std::int64_t mutations = f.mutations >= 0 ? f.mutations : (f.n <= 16 ? 200 : 1000);

  Manifest manifest;
  manifest.command = "bench artificial";
  manifest.arguments = args;
  manifest.seed = f.search.seed;
  manifest.config = config_json(config);
  manifest.config["threads"] = trial_threads;
  manifest.config["n"] = f.n;
  manifest.config["trials"] = f.trials;
  manifest.config["mutations"] = mutations;

  const auto start = std::chrono::steady_clock::now();
  const auto reports =
      reconstruction_trials(f.trials, f.n, mutations, config, f.search.seed, trial_threads);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const fs::path dir(f.out_dir);
  fs::create_directories(dir);
  std::string lines;
  int exact = 0;
  int perfect = 0;
  double max_wall = 0.0;
  for (const auto& r : reports) {
    lines += to_json_line(r) + "\n";
    exact += r.exact ? 1 : 0;
    perfect += r.s_score == 1.0 ? 1 : 0;
    max_wall = std::max(max_wall, r.wall_seconds);
  }
  write_text(dir / "trials.jsonl", lines);
  const json summary = {{"schema_version", result_schema_version},
                        {"manifest", manifest.to_json()},
                        {"trials", f.trials},
                        {"exact", exact},
                        {"perfect_score", perfect},
                        {"max_trial_seconds", max_wall},
                        {"wall_seconds", elapsed.count()}};
  write_text(dir / "summary.json", summary.dump(2) + "\n");
  out << "exact " << exact << "/" << f.trials << "\n"
      << "perfect_score " << perfect << "/" << f.trials << "\n"
      << "max_trial_seconds " << format_real(max_wall) << "\n";
  return exit_ok;
}

struct StatsFlags {
  int runs = 100;
  int n = 10;
  std::int64_t mutations = 200;
  std::string matrix_path;
  std::string input_format = "auto";
  std::int64_t bin_width = 1000;
  std::string out_dir = ".";
  SearchFlags search;
};

int cmd_bench_stats(const StatsFlags& f, const std::vector<std::string>& args, std::ostream& out) {
  SearchConfig config = f.search.config();
  validate(config);
  const int run_threads = config.threads;
  config.threads = 1;

  Manifest manifest;
  manifest.command = "bench stats";
  manifest.arguments = args;
  manifest.seed = f.search.seed;
  manifest.config = config_json(config);
  manifest.config["threads"] = run_threads;
  manifest.config["runs"] = f.runs;
  manifest.config["bin_width"] = f.bin_width;

  DistanceMatrix dm;
  if (!f.matrix_path.empty()) {
    auto loaded = load_matrix(f.matrix_path, f.input_format);
    manifest.add_input(f.matrix_path, loaded.bytes);
    dm = std::move(loaded.matrix);
  } else {
    Rng rng(derive_seed(f.search.seed, 0xA27));
    dm = generate_artificial(f.n, f.mutations, rng).matrix;
    manifest.config["n"] = f.n;
    manifest.config["mutations"] = f.mutations;
  }
  const auto cf = CostFunction::from_distances(dm);

  std::vector<SearchResult> results(static_cast<std::size_t>(f.runs));
  parallel_for(f.runs, run_threads, [&](int i) {
    SearchConfig c = config;
    c.seed = derive_seed(f.search.seed, static_cast<std::uint64_t>(i));
    results[static_cast<std::size_t>(i)] = search(cf, c);
  });
  const auto stats = run_statistics(std::span<const SearchResult>(results), f.bin_width);

  const fs::path dir(f.out_dir);
  fs::create_directories(dir);
  const std::string header = manifest.header();
  write_text(dir / "trees_examined_histogram.csv", histogram_csv(stats, header));
  write_text(dir / "k_pmf.csv", k_pmf_csv(stats, header));
  write_text(dir / "progress.csv", progress_csv(stats, header));
  write_text(dir / "manifest.json", manifest.to_json().dump(2) + "\n");
  out << "runs " << f.runs << "\n"
      << "histogram_bins " << stats.trees_examined.size() << "\n";
  return exit_ok;
}

int report(std::ostream& err, int code, const std::exception& e) {
  err << "mqtc: " << e.what() << "\n";
  return code;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view version() { return MQTC_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quartet-tree hierarchical clustering", "mqtc"};
  app.set_version_flag("--version", std::string(version()));

  ClusterFlags cluster;
  auto* cluster_cmd = app.add_subcommand("cluster", "Find a tree for a distance matrix");
  cluster_cmd->add_option("matrix", cluster.matrix_path, "Distance matrix file")->required();
  cluster_cmd->add_option("--input-format", cluster.input_format, "Matrix format")
      ->check(CLI::IsMember({"auto", "csv", "phylip", "nexus"}))
      ->capture_default_str();
  cluster_cmd->add_option("--out-dir", cluster.out_dir, "Output directory")->capture_default_str();
  cluster_cmd->add_flag("-v,--verbose", cluster.verbose, "Report every improvement on stderr");
  cluster.search.add_to(cluster_cmd);

  NcdFlags ncd_flags;
  auto* ncd_cmd = app.add_subcommand("ncd", "NCD matrix of a corpus directory or manifest");
  ncd_cmd->add_option("corpus", ncd_flags.corpus, "Directory or manifest file")->required();
  ncd_cmd->add_option("--format", ncd_flags.format, "Output matrix format")
      ->check(CLI::IsMember({"csv", "phylip", "nexus"}))
      ->capture_default_str();
  ncd_cmd->add_option("--compressor", ncd_flags.compressor, "Compressor")
      ->check(CLI::IsMember({"zlib", "lzma"}))
      ->capture_default_str();
  ncd_cmd->add_option("-o,--output", ncd_flags.output, "Output file (default stdout)");
  ncd_cmd->add_option("--threads", ncd_flags.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ScoreFlags score_flags;
  auto* score_cmd = app.add_subcommand("score", "Score a Newick tree against a matrix");
  score_cmd->add_option("matrix", score_flags.matrix_path, "Distance matrix file")->required();
  score_cmd->add_option("tree", score_flags.tree_path, "Newick tree file")->required();
  score_cmd->add_option("--compare", score_flags.compare_path,
                        "Second Newick tree; reports its score and the decibel gain");
  score_cmd->add_option("--input-format", score_flags.input_format, "Matrix format")
      ->check(CLI::IsMember({"auto", "csv", "phylip", "nexus"}))
      ->capture_default_str();
  score_cmd->add_option("--scorer", score_flags.scorer, "Tree cost evaluation")
      ->check(CLI::IsMember({"naive", "fast"}))
      ->capture_default_str();

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark experiments");

  ArtificialFlags artificial;
  auto* artificial_cmd =
      bench_cmd->add_subcommand("artificial", "Reconstruct scrambled caterpillar trees");
  artificial_cmd->add_option("--n", artificial.n, "Leaves per tree")
      ->check(CLI::Range(4, 100000))
      ->capture_default_str();
  artificial_cmd->add_option("--trials", artificial.trials, "Number of trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  artificial_cmd->add_option("--mutations", artificial.mutations,
                             "k-mutations applied to the caterpillar (default 200 for n <= 16, "
                             "else 1000)");
  artificial_cmd->add_option("--out-dir", artificial.out_dir, "Output directory")
      ->capture_default_str();
  artificial.search.add_to(artificial_cmd);

  StatsFlags stats;
  auto* stats_cmd = bench_cmd->add_subcommand("stats", "Run statistics over repeated searches");
  stats_cmd->add_option("--runs", stats.runs, "Number of searches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  stats_cmd->add_option("--matrix", stats.matrix_path,
                        "Distance matrix (default: a generated artificial instance)");
  stats_cmd->add_option("--input-format", stats.input_format, "Matrix format")
      ->check(CLI::IsMember({"auto", "csv", "phylip", "nexus"}))
      ->capture_default_str();
  stats_cmd->add_option("--n", stats.n, "Leaves of the generated instance")
      ->check(CLI::Range(4, 100000))
      ->capture_default_str();
  stats_cmd->add_option("--mutations", stats.mutations, "Scramble of the generated instance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  stats_cmd->add_option("--bin-width", stats.bin_width, "Histogram bin width in trees")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  stats_cmd->add_option("--out-dir", stats.out_dir, "Output directory")->capture_default_str();
  stats.search.add_to(stats_cmd, "--agreement-runs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (cluster_cmd->parsed()) return cmd_cluster(cluster, args, out, err);
    if (ncd_cmd->parsed()) return cmd_ncd(ncd_flags, args, out, err);
    if (score_cmd->parsed()) return cmd_score(score_flags, out);
    if (artificial_cmd->parsed()) return cmd_bench_artificial(artificial, args, out);
    if (stats_cmd->parsed()) return cmd_bench_stats(stats, args, out);
  } catch (const parse_error& e) {
    return report(err, exit_input, e);
  } catch (const invalid_input_error& e) {
    return report(err, exit_input, e);
  } catch (const invalid_size_error& e) {
    return report(err, exit_input, e);
  } catch (const invalid_label_error& e) {
    return report(err, exit_input, e);
  } catch (const invalid_corpus_error& e) {
    return report(err, exit_input, e);
  } catch (const invalid_comparison_error& e) {
    return report(err, exit_input, e);
  } catch (const invalid_node_error& e) {
    return report(err, exit_input, e);
  } catch (const fs::filesystem_error& e) {
    return report(err, exit_input, e);
  } catch (const std::exception& e) {
    return report(err, exit_internal, e);
  }
  err << (bench_cmd->parsed() ? bench_cmd->help() : app.help());
  return exit_usage;
}

}  // namespace mqtc::cli
