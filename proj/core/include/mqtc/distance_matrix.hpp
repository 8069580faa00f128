#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mqtc {

/// Symmetric, nonnegative, finite n x n matrix with zero diagonal and a name
/// per row. Immutable once constructed.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  /// Row-major values. Names default to "0".."n-1" when empty. Throws
  /// invalid_input_error naming the first violated invariant.
  DistanceMatrix(std::size_t n, std::vector<double> values,
                 std::vector<std::string> names = {});

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return values_[i * n_ + j];
  }
  const double* row(std::size_t i) const noexcept { return values_.data() + i * n_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Index of the row called `name`, or size() when absent.
  std::size_t index_of(const std::string& name) const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  std::vector<std::string> names_;
};

}  // namespace mqtc
