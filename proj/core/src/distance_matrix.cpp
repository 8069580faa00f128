#include "mqtc/distance_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mqtc/error.hpp"

namespace mqtc {

namespace {

std::string fmt_entry(std::size_t i, std::size_t j, double v) {
  std::ostringstream os;
  os.precision(17);
  os << "d(" << i << "," << j << ")=" << v;
  return os.str();
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values,
                               std::vector<std::string> names)
    : n_(n), values_(std::move(values)), names_(std::move(names)) {
  if (values_.size() != n_ * n_) {
    throw invalid_input_error("distance matrix has " + std::to_string(values_.size()) +
                              " values, expected " + std::to_string(n_ * n_));
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) names_.push_back(std::to_string(i));
  }
  if (names_.size() != n_) {
    throw invalid_input_error("distance matrix has " + std::to_string(names_.size()) +
                              " names for " + std::to_string(n_) + " rows");
  }
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n_) {
    throw invalid_input_error("distance matrix names are not unique");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = (*this)(i, j);
      if (!std::isfinite(v)) {
        throw invalid_input_error("distance matrix entry is not finite: " + fmt_entry(i, j, v));
      }
      if (v < 0.0) {
        throw invalid_input_error("distance matrix entry is negative: " + fmt_entry(i, j, v));
      }
      if (i == j && v != 0.0) {
        throw invalid_input_error("distance matrix diagonal is not zero: " + fmt_entry(i, j, v));
      }
      if (j > i && v != (*this)(j, i)) {
        throw invalid_input_error("distance matrix is not symmetric: " + fmt_entry(i, j, v) +
                                  " but " + fmt_entry(j, i, (*this)(j, i)));
      }
    }
  }
}

std::size_t DistanceMatrix::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

}  // namespace mqtc
