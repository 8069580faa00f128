#include "mqtc/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "mqtc/error.hpp"

namespace mqtc {

namespace {

std::size_t topology_count(int n) {
  return 3 * static_cast<std::size_t>(choose(static_cast<std::uint64_t>(n), 4));
}

void check_leaf_counts(const Tree& tree, const CostFunction& cf) {
  if (tree.leaf_count() != cf.leaf_count()) {
    throw invalid_comparison_error("tree has " + std::to_string(tree.leaf_count()) +
                                   " leaves but the cost function covers " +
                                   std::to_string(cf.leaf_count()) + " labels");
  }
}

}  // namespace

CostFunction CostFunction::from_table(int n, std::vector<double> costs) {
  if (n < 4) throw invalid_size_error("cost functions need at least 4 labels");
  if (costs.size() != topology_count(n)) {
    throw incomplete_cost_error("cost table has " + std::to_string(costs.size()) +
                                " entries, expected " + std::to_string(topology_count(n)));
  }
  if (!std::all_of(costs.begin(), costs.end(), [](double c) { return std::isfinite(c); })) {
    throw invalid_input_error("cost table contains a non-finite value");
  }
  CostFunction cf;
  cf.n_ = n;
  cf.table_ = std::move(costs);
  return cf;
}

CostFunction CostFunction::from_map(int n, const std::map<QuartetTopology, double>& costs) {
  if (n < 4) throw invalid_size_error("cost functions need at least 4 labels");
  std::vector<double> table(topology_count(n));
  std::size_t seen = 0;
  for (const auto& [topo, c] : costs) {
    const Quartet q = topo.quartet();
    if (q.labels[3] >= n) {
      throw invalid_label_error("topology " + topo.to_string() + " is outside 0.." +
                                std::to_string(n - 1));
    }
    table[3 * quartet_rank(q) + static_cast<std::size_t>(topo.index())] = c;
    ++seen;
  }
  if (seen != table.size()) {
    throw incomplete_cost_error("cost mapping covers " + std::to_string(seen) + " of " +
                                std::to_string(table.size()) + " quartet topologies");
  }
  return from_table(n, std::move(table));
}

CostFunction CostFunction::from_distances(DistanceMatrix dm) {
  if (dm.size() < 4) throw invalid_size_error("cost functions need at least 4 labels");
  CostFunction cf;
  cf.n_ = static_cast<int>(dm.size());
  cf.distances_ = std::make_shared<const DistanceMatrix>(std::move(dm));
  return cf;
}

double CostFunction::cost(const QuartetTopology& topo) const {
  const Quartet q = topo.quartet();
  if (q.labels[3] >= n_) {
    throw invalid_label_error("topology " + topo.to_string() + " is outside 0.." +
                              std::to_string(n_ - 1));
  }
  return costs_of(q, quartet_rank(q))[static_cast<std::size_t>(topo.index())];
}

double cost_of(const CostFunction& cf, const QuartetTopology& topo) { return cf.cost(topo); }

CostFunction cost_from_mqc(int n, const std::vector<QuartetTopology>& p_set) {
  std::vector<double> table(topology_count(n), 1.0);
  for (const auto& topo : p_set) {
    const Quartet q = topo.quartet();
    if (q.labels[3] >= n) {
      throw invalid_label_error("topology " + topo.to_string() + " is outside 0.." +
                                std::to_string(n - 1));
    }
    table[3 * quartet_rank(q) + static_cast<std::size_t>(topo.index())] = 0.0;
  }
  return CostFunction::from_table(n, std::move(table));
}

double tree_cost_naive(const Tree& tree, const CostFunction& cf) {
  check_leaf_counts(tree, cf);
  const int n = tree.leaf_count();
  const auto paths = leaf_path_lengths(tree);
  double total = 0.0;
  for_each_quartet(n, [&](const Quartet& q, std::size_t rank) {
    total += cf.costs_of(q, rank)[static_cast<std::size_t>(embedded_index(paths, n, q))];
  });
  return total;
}

ScoreBounds bounds(const CostFunction& cf) {
  ScoreBounds b;
  double magnitude = 0.0;
  double count = 0.0;
  for_each_quartet(cf.leaf_count(), [&](const Quartet& q, std::size_t rank) {
    const auto c = cf.costs_of(q, rank);
    b.m += std::min({c[0], c[1], c[2]});
    b.M += std::max({c[0], c[1], c[2]});
    magnitude += std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
    count += 1.0;
  });
  // Recursive summation error bound, doubled to cover a second summation order.
  b.tolerance = 2.0 * count * std::numeric_limits<double>::epsilon() * magnitude;
  return b;
}

double score_from_cost(double tree_cost, const ScoreBounds& b) noexcept {
  if (b.M - b.m <= b.tolerance || tree_cost - b.m <= b.tolerance) return 1.0;
  if (b.M - tree_cost <= b.tolerance) return 0.0;
  return std::clamp((b.M - tree_cost) / (b.M - b.m), 0.0, 1.0);
}

double score(const Tree& tree, const CostFunction& cf) {
  return score_from_cost(tree_cost_naive(tree, cf), bounds(cf));
}

}  // namespace mqtc
