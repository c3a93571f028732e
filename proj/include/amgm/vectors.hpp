#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace amgm {

/// Tolerances applied when validating a weight vector.
inline constexpr double kWeightSumTolerance = 1e-12;
inline constexpr double kWeightRenormalizeLimit = 1e-6;

struct WeightOptions {
  /// Rescale weights whose sum is off by at most kWeightRenormalizeLimit
  /// instead of rejecting them.
  bool renormalize = false;
};

/// Strictly positive weights summing to one, length >= 2. Immutable.
///
/// The compensated sum of the stored weights is kept as total(); the means
/// divide by it, so a vector that passed validation behaves as if it were
/// exactly normalized.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights, WeightOptions options = {});

  static WeightVector uniform(std::size_t n);

  std::span<const double> values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  double total() const noexcept { return total_; }

 private:
  std::vector<double> weights_;
  double min_ = 0.0;
  double max_ = 0.0;
  double total_ = 0.0;
};

/// Finite, nonnegative samples, length >= 2. Immutable.
class DataVector {
 public:
  explicit DataVector(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  bool has_zero() const noexcept { return has_zero_; }
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }

 private:
  std::vector<double> values_;
  bool has_zero_ = false;
  double min_ = 0.0;
  double max_ = 0.0;
};

/// Throws DimensionError unless both sizes agree.
void require_same_size(std::size_t a, std::size_t b, const char* what);

}  // namespace amgm
