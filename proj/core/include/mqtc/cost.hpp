#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "mqtc/distance_matrix.hpp"
#include "mqtc/quartet.hpp"
#include "mqtc/tree.hpp"

namespace mqtc {

/// Real-valued cost for every quartet topology over labels 0..n-1.
///
/// Either an explicit table of 3*C(n,4) values (indexed by quartet rank and
/// topology index) or a distance matrix read through
/// C(uv|wx) = d(u,v) + d(w,x). Read-only and cheap to copy.
class CostFunction {
 public:
  /// Explicit table laid out as costs[3*rank + index]. Throws
  /// invalid_size_error for n < 4, incomplete_cost_error on a size mismatch
  /// and invalid_input_error on non-finite entries.
  static CostFunction from_table(int n, std::vector<double> costs);

  /// Explicit mapping; throws incomplete_cost_error if any topology is
  /// missing.
  static CostFunction from_map(int n, const std::map<QuartetTopology, double>& costs);

  static CostFunction from_distances(DistanceMatrix dm);

  int leaf_count() const noexcept { return n_; }
  bool is_distance_backed() const noexcept { return distances_ != nullptr; }
  /// Null for explicit cost functions.
  const DistanceMatrix* distances() const noexcept { return distances_.get(); }

  /// Cost of one topology. Throws invalid_label_error outside the label range.
  double cost(const QuartetTopology& topo) const;

  /// The three topology costs of a quartet, by topology index.
  std::array<double, 3> costs_of(const Quartet& q, std::size_t rank) const noexcept {
    if (distances_) {
      const auto& d = *distances_;
      const auto [a, b, c, e] = q.labels;
      const auto u = [](node_id v) { return static_cast<std::size_t>(v); };
      return {d(u(a), u(b)) + d(u(c), u(e)), d(u(a), u(c)) + d(u(b), u(e)),
              d(u(a), u(e)) + d(u(b), u(c))};
    }
    return {table_[3 * rank], table_[3 * rank + 1], table_[3 * rank + 2]};
  }

 private:
  int n_ = 0;
  std::vector<double> table_;
  std::shared_ptr<const DistanceMatrix> distances_;
};

/// Normalisation bounds: m sums per-quartet minimal costs, M the maxima.
/// `tolerance` bounds the rounding error of any summed tree cost; costs
/// within it of m or M score exactly 1 or 0.
struct ScoreBounds {
  double m = 0.0;
  double M = 0.0;
  double tolerance = 0.0;
};

double cost_of(const CostFunction& cf, const QuartetTopology& topo);

/// The reduction cost function: 0 on every topology in `p_set`, 1 elsewhere.
CostFunction cost_from_mqc(int n, const std::vector<QuartetTopology>& p_set);

/// C_T: the summed cost of the C(n,4) topologies embedded in `tree`.
/// Throws invalid_comparison_error when leaf counts differ.
double tree_cost_naive(const Tree& tree, const CostFunction& cf);

ScoreBounds bounds(const CostFunction& cf);

/// S(T) = (M - C_T) / (M - m), clamped to [0,1]; 1 when M == m up to the
/// bounds' tolerance.
double score_from_cost(double tree_cost, const ScoreBounds& b) noexcept;

double score(const Tree& tree, const CostFunction& cf);

}  // namespace mqtc
