#pragma once

#include <cstdint>
#include <vector>

#include "mqtc/random.hpp"

namespace mqtc {

/// The shifted fat-tail pmf p(k) proportional to 1 / ((k+2) * ln(k+2)^2)
/// for k >= 1.
///
/// Values of k up to `table_size` are drawn exactly by inverse CDF over a
/// precomputed table; beyond it the tail is drawn from the continuous density
/// 1 / (x ln^2 x) on [table_size + 2.5, inf), rounded to the nearest integer.
/// The tail carries most of the mass far out (P(k > 10^6) is about 7%), so
/// draws saturate at `max_value`.
class FatTailDistribution {
 public:
  static constexpr std::int64_t max_value = std::int64_t{1} << 62;

  explicit FatTailDistribution(std::int64_t table_size = 1 << 16);

  /// Normalised probability of k (0 for k < 1).
  double pmf(std::int64_t k) const noexcept;

  /// The normalising constant sum_{k>=1} 1/((k+2) ln(k+2)^2).
  double normalizer() const noexcept { return normalizer_; }

  std::int64_t operator()(Rng& rng) const;

  /// Shared instance with the default table.
  static const FatTailDistribution& standard();

 private:
  std::int64_t table_size_;
  double normalizer_;
  std::vector<double> cdf_;  // cdf_[k-1] = P(K <= k)
};

/// One draw of the k-mutation length.
std::int64_t sample_k(Rng& rng);

}  // namespace mqtc
