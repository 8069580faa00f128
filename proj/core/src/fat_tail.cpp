#include "mqtc/fat_tail.hpp"

#include <algorithm>
#include <cmath>

#include "mqtc/error.hpp"

namespace mqtc {

namespace {

// Unnormalised mass at j = k + 2.
double mass(double j) {
  const double l = std::log(j);
  return 1.0 / (j * l * l);
}

// sum_{j > J} mass(j) by Euler-Maclaurin: integral 1/ln J minus the first
// boundary corrections.
double tail_sum(double J) {
  const double l = std::log(J);
  const double derivative = -(l + 2.0) / (J * J * l * l * l);
  return 1.0 / l - mass(J) / 2.0 - derivative / 12.0;
}

}  // namespace

FatTailDistribution::FatTailDistribution(std::int64_t table_size) : table_size_(table_size) {
  if (table_size < 16) throw invalid_input_error("fat-tail table must hold at least 16 values");
  // Direct summation far past the table, smallest terms first.
  const std::int64_t direct_end = table_size * 64 + 2;
  double direct = 0.0;
  for (std::int64_t j = direct_end; j >= 3; --j) direct += mass(static_cast<double>(j));
  normalizer_ = direct + tail_sum(static_cast<double>(direct_end));

  cdf_.resize(static_cast<std::size_t>(table_size));
  double acc = 0.0;
  for (std::int64_t k = 1; k <= table_size; ++k) {
    acc += mass(static_cast<double>(k + 2));
    cdf_[static_cast<std::size_t>(k - 1)] = acc / normalizer_;
  }
}

double FatTailDistribution::pmf(std::int64_t k) const noexcept {
  if (k < 1) return 0.0;
  return mass(static_cast<double>(k) + 2.0) / normalizer_;
}

std::int64_t FatTailDistribution::operator()(Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  const double table_mass = cdf_.back();
  if (u < table_mass) {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::int64_t>(it - cdf_.begin()) + 1;
  }
  const double v = (u - table_mass) / (1.0 - table_mass);
  const double log_start = std::log(static_cast<double>(table_size_) + 2.5);
  const double log_x = log_start / (1.0 - v);
  if (!(log_x < std::log(static_cast<double>(max_value)))) return max_value;
  const auto j = static_cast<std::int64_t>(std::floor(std::exp(log_x) + 0.5));
  return std::clamp<std::int64_t>(j - 2, table_size_ + 1, max_value);
}

const FatTailDistribution& FatTailDistribution::standard() {
  static const FatTailDistribution instance;
  return instance;
}

std::int64_t sample_k(Rng& rng) { return FatTailDistribution::standard()(rng); }

}  // namespace mqtc
