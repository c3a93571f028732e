#include "amgm/inequality.hpp"

#include "amgm/error.hpp"
#include "amgm/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace amgm {

bool relatively_equal(double a, double b, double tol) noexcept {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

double power_log_domain(double base, double exponent) noexcept {
  if (base == 0.0) return 0.0;
  return std::exp(exponent * std::log(base));
}

MeanSummary mean_summary(std::span<const double> weights, double weight_total, std::span<const double> x) {
  const double total = weights.empty() ? static_cast<double>(x.size()) : weight_total;
  MeanSummary out;
  out.am = kernels::dot(weights, x) / total;
  if (!(out.am > 0.0)) return {};
  if (std::ranges::find(x, 0.0) != x.end()) {
    out.gap = out.am;
    return out;
  }
  out.gm = std::min(out.am, out.am * std::exp(kernels::log_ratio_sum(weights, x, out.am) / total));
  if (out.gm <= 0.5 * out.am) {
    // No cancellation to worry about.
    out.gap = out.am - out.gm;
    return out;
  }
  out.gap = out.gm * (kernels::log_deficit_sum(weights, x, out.gm) / total);
  if (out.gap < 0.0 && -out.gap <= kGapClampFactor * out.am) out.gap = 0.0;
  return out;
}

namespace {

MeanSummary summarize(const WeightVector& w, const DataVector& x) {
  require_same_size(w.size(), x.size(), "weights and data");
  return mean_summary(w.values(), w.total(), x.values());
}

}  // namespace

double weighted_arithmetic_mean(const WeightVector& w, const DataVector& x) {
  require_same_size(w.size(), x.size(), "weights and data");
  return kernels::dot(w.values(), x.values()) / w.total();
}

double weighted_geometric_mean(const WeightVector& w, const DataVector& x) { return summarize(w, x).gm; }

double amgm_gap(const WeightVector& w, const DataVector& x) { return summarize(w, x).gap; }

double variance_lower_bound(const WeightVector& w, const DataVector& x) {
  require_same_size(w.size(), x.size(), "weights and data");
  std::vector<double> roots(x.size());
  std::ranges::transform(x.values(), roots.begin(), [](double v) { return std::sqrt(v); });
  const double mean_root = kernels::dot(w.values(), roots) / w.total();
  for (double& r : roots) r = (r - mean_root) * (r - mean_root);
  return kernels::dot(w.values(), roots) / w.total();
}

QuotientProfile quotient_profile(const WeightVector& alpha, const WeightVector& beta) {
  require_same_size(alpha.size(), beta.size(), "alpha and beta");
  QuotientProfile p;
  p.quotients.resize(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) p.quotients[i] = alpha[i] / beta[i];
  const auto [lo, hi] = std::ranges::minmax_element(p.quotients);
  p.min_quotient = *lo;
  p.max_quotient = *hi;
  for (std::size_t i = 0; i < p.quotients.size(); ++i) {
    if (p.quotients[i] - p.min_quotient <= kQuotientTieTolerance * p.min_quotient) p.argmin_set.push_back(i);
    if (p.max_quotient - p.quotients[i] <= kQuotientTieTolerance * p.max_quotient) p.argmax_set.push_back(i);
  }
  return p;
}

GapComparison gap_comparison(const WeightVector& alpha, const WeightVector& beta, const DataVector& x) {
  GapComparison out;
  out.profile = quotient_profile(alpha, beta);
  out.gap_alpha = summarize(alpha, x).gap;
  out.gap_beta = summarize(beta, x).gap;
  out.lower = out.profile.min_quotient * out.gap_beta;
  out.upper = out.profile.max_quotient * out.gap_beta;
  return out;
}

GapComparison equal_weight_bounds(const WeightVector& alpha, const DataVector& x) {
  return gap_comparison(alpha, WeightVector::uniform(alpha.size()), x);
}

EqualityDiagnosis equality_diagnosis(const WeightVector& alpha, const WeightVector& beta, const DataVector& x,
                                     double tol) {
  if (!(tol > 0.0)) throw DomainError("equality tolerance must be positive");
  require_same_size(alpha.size(), x.size(), "weights and data");
  const QuotientProfile profile = quotient_profile(alpha, beta);
  EqualityDiagnosis out;
  if (profile.uniform()) {
    // alpha == beta: both sides are identities.
    out.left_equal = out.right_equal = true;
    return out;
  }
  const double forced = summarize(alpha, x).gm;
  auto off_set_matches = [&](const std::vector<std::size_t>& set) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (std::ranges::binary_search(set, j)) continue;
      if (!relatively_equal(x[j], forced, tol)) return false;
    }
    return true;
  };
  out.forced_value_left = forced;
  out.forced_value_right = forced;
  out.left_equal = off_set_matches(profile.argmin_set);
  out.right_equal = off_set_matches(profile.argmax_set);
  return out;
}

RatioBounds ratio_bounds(const WeightVector& alpha, const DataVector& x) {
  require_same_size(alpha.size(), x.size(), "weights and data");
  if (x.max() == 0.0) throw DegenerateInputError("GM/AM ratio is undefined for identically zero data");
  const double n = static_cast<double>(x.size());
  const MeanSummary equal = mean_summary({}, n, x.values());
  const MeanSummary weighted = summarize(alpha, x);

  RatioBounds out;
  out.gm_am_ratio = equal.gm / equal.am;
  out.ratio = weighted.gm / weighted.am;
  out.exponent_max = n * alpha.max();
  out.exponent_min = n * alpha.min();
  out.lower = power_log_domain(out.gm_am_ratio, out.exponent_max);
  out.upper = power_log_domain(out.gm_am_ratio, out.exponent_min);
  return out;
}

}  // namespace amgm
