#include "amgm/vectors.hpp"

#include "amgm/error.hpp"
#include "amgm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace amgm {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

WeightVector::WeightVector(std::vector<double> weights, WeightOptions options) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw DimensionError("weight vector needs n >= 2 entries");
  for (double w : weights_) {
    if (!std::isfinite(w) || !(w > 0.0)) throw WeightError("weights must be finite and strictly positive");
  }
  total_ = kernels::sum(weights_);
  const double deviation = std::abs(total_ - 1.0);
  if (deviation > kWeightRenormalizeLimit) {
    throw WeightError("weights sum to " + std::to_string(total_) + ", not 1");
  }
  if (deviation > kWeightSumTolerance) {
    if (!options.renormalize) {
      throw WeightError("weights sum to 1 only within " + std::to_string(deviation) +
                        "; enable renormalization to accept them");
    }
    const double scale = total_;
    for (double& w : weights_) w /= scale;
    total_ = kernels::sum(weights_);
  }
  const auto [lo, hi] = std::ranges::minmax_element(weights_);
  min_ = *lo;
  max_ = *hi;
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n < 2) throw DimensionError("weight vector needs n >= 2 entries");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DataVector::DataVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw DimensionError("data vector needs n >= 2 entries");
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError("data values must be finite and nonnegative");
  }
  const auto [lo, hi] = std::ranges::minmax_element(values_);
  min_ = *lo;
  max_ = *hi;
  has_zero_ = min_ == 0.0;
}

}  // namespace amgm
