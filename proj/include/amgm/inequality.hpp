#pragma once

// Weighted means, the AM-GM gap, and the two-sided comparison between gaps
// taken with different weight sequences:
//
//   min_k(a_k/b_k) * gap_b(x) <= gap_a(x) <= max_k(a_k/b_k) * gap_b(x),
//   gap_w(x) = sum_i w_i x_i - prod_i x_i^{w_i}.
//
// Indices are 0-based throughout the API.

#include "amgm/vectors.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace amgm {

inline constexpr double kQuotientTieTolerance = 1e-12;
inline constexpr double kDefaultEqualityTolerance = 1e-9;
/// Negative gaps no larger than this fraction of the arithmetic mean are
/// rounding noise and are reported as zero.
inline constexpr double kGapClampFactor = 1e-15;

struct QuotientProfile {
  std::vector<double> quotients;  ///< alpha_i / beta_i
  double min_quotient = 0.0;
  double max_quotient = 0.0;
  std::vector<std::size_t> argmin_set;  ///< A: indices attaining the minimum
  std::vector<std::size_t> argmax_set;  ///< B: indices attaining the maximum

  /// True when every quotient ties with both extrema (alpha == beta).
  bool uniform() const noexcept { return argmin_set.size() == quotients.size(); }
};

struct GapComparison {
  double gap_alpha = 0.0;
  double gap_beta = 0.0;
  double lower = 0.0;  ///< min_quotient * gap_beta
  double upper = 0.0;  ///< max_quotient * gap_beta
  QuotientProfile profile;
};

struct EqualityDiagnosis {
  bool left_equal = false;
  bool right_equal = false;
  /// The value every x_j off A (resp. off B) must take for equality.
  /// Empty when the set covers all indices, so no condition applies.
  std::optional<double> forced_value_left;
  std::optional<double> forced_value_right;
};

/// r^{n alpha_max} <= GM_alpha / AM_alpha <= r^{n alpha_min},
/// r the equal-weights GM/AM ratio.
struct RatioBounds {
  double lower = 0.0;
  double ratio = 0.0;  ///< GM_alpha / AM_alpha
  double upper = 0.0;
  double gm_am_ratio = 0.0;  ///< r
  double exponent_max = 0.0;  ///< n * alpha_max
  double exponent_min = 0.0;  ///< n * alpha_min
};

/// Arithmetic mean, geometric mean and their gap for one weight sequence.
struct MeanSummary {
  double am = 0.0;
  double gm = 0.0;
  double gap = 0.0;
};

/// Span-level engine behind the operations below. An empty weight span
/// means equal weights; weight_total is the sum the weights are divided by
/// (ignored for equal weights). Inputs are assumed validated: x finite and
/// nonnegative, sizes equal.
///
/// The geometric mean is AM * exp(sum w ln(x/AM) / W). The gap is
/// evaluated as GM * sum w phi(x/GM - 1) / W with phi(t) = t - ln(1+t) >= 0,
/// which avoids the cancellation in AM - GM when the data are nearly
/// constant.
MeanSummary mean_summary(std::span<const double> weights, double weight_total, std::span<const double> x);

double weighted_arithmetic_mean(const WeightVector& w, const DataVector& x);
double weighted_geometric_mean(const WeightVector& w, const DataVector& x);
double amgm_gap(const WeightVector& w, const DataVector& x);

/// sum_i w_i (sqrt(x_i) - sum_k w_k sqrt(x_k))^2, a lower bound for amgm_gap.
double variance_lower_bound(const WeightVector& w, const DataVector& x);

QuotientProfile quotient_profile(const WeightVector& alpha, const WeightVector& beta);
GapComparison gap_comparison(const WeightVector& alpha, const WeightVector& beta, const DataVector& x);

/// gap_comparison with beta = (1/n, ..., 1/n); the constants are
/// n * alpha_min and n * alpha_max.
GapComparison equal_weight_bounds(const WeightVector& alpha, const DataVector& x);

EqualityDiagnosis equality_diagnosis(const WeightVector& alpha, const WeightVector& beta, const DataVector& x,
                                     double tol = kDefaultEqualityTolerance);

/// Throws DegenerateInputError when x is identically zero.
RatioBounds ratio_bounds(const WeightVector& alpha, const DataVector& x);

/// |a - b| <= tol * max(|a|, |b|).
bool relatively_equal(double a, double b, double tol) noexcept;

/// base^exponent for base >= 0, exponent > 0, through the log domain.
double power_log_domain(double base, double exponent) noexcept;

}  // namespace amgm
