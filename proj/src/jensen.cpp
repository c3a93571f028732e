#include "amgm/jensen.hpp"

#include "amgm/error.hpp"
#include "amgm/kernels.hpp"
#include "amgm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace amgm {

bool Interval::contains(double t) const noexcept {
  if (std::isnan(t)) return false;
  const bool above = lo_open ? t > lo : t >= lo;
  const bool below = hi_open ? t < hi : t <= hi;
  return above && below;
}

ConvexFunction::ConvexFunction(std::string name, Evaluator f, Interval domain, bool strict, Divergence divergence)
    : name_(std::move(name)), f_(std::move(f)), domain_(domain), strict_(strict), divergence_(std::move(divergence)) {
  if (!f_) throw DomainError("convex function '" + name_ + "' has no evaluator");
}

namespace {

// expm1(d) - d without cancellation for small |d|.
double expm1_minus_linear(double d) {
  if (std::abs(d) >= 0.5) return std::expm1(d) - d;
  // d^2/2! (1 + d/3 (1 + d/4 (1 + ...))), truncated where 0.5^k/k! < 1e-18.
  double acc = 1.0;
  for (int k = 20; k >= 3; --k) acc = 1.0 + d / k * acc;
  return 0.5 * d * d * acc;
}

}  // namespace

ConvexFunction make_convex_function(std::string_view name) {
  const Interval real_line{};
  if (name == "exp") {
    return ConvexFunction(
        "exp", [](double t) { return std::exp(t); }, real_line, true,
        [](double x, double m) { return std::exp(m) * expm1_minus_linear(x - m); });
  }
  if (name == "square") {
    return ConvexFunction(
        "square", [](double t) { return t * t; }, real_line, true,
        [](double x, double m) { return (x - m) * (x - m); });
  }
  if (name == "quartic") {
    return ConvexFunction(
        "quartic", [](double t) { return (t * t) * (t * t); }, real_line, true, [](double x, double m) {
          const double d = x - m;
          return d * d * ((x + m) * (x + m) + 2.0 * m * m);
        });
  }
  if (name == "neg-log") {
    return ConvexFunction(
        "neg-log", [](double t) { return -std::log(t); }, Interval{0.0, real_line.hi, true, true}, true,
        [](double x, double m) { return kernels::log_deficit(x, m); });
  }
  if (name == "xlogx") {
    return ConvexFunction(
        "xlogx", [](double t) { return t == 0.0 ? 0.0 : t * std::log(t); }, Interval{0.0, real_line.hi, false, true},
        true, [](double x, double m) {
          if (m == 0.0) return 0.0;
          if (x == 0.0) return m;
          const double t = (x - m) / m;
          if (std::abs(t) <= 0.5) return m * (t * t - (1.0 + t) * kernels::log_deficit(x, m));
          return x * kernels::log_ratio(x, m) - (x - m);
        });
  }
  if (name == "affine") {
    return ConvexFunction(
        "affine", [](double t) { return t; }, real_line, false, [](double, double) { return 0.0; });
  }
  throw DomainError("unknown convex function '" + std::string(name) + "'");
}

std::vector<std::string> convex_catalog() { return {"exp", "square", "quartic", "neg-log", "xlogx", "affine"}; }

ConvexityProbe probe_convexity(const ConvexFunction& f, double lo, double hi, std::size_t probes,
                               std::uint64_t seed) {
  ConvexityProbe out;
  lo = std::max(lo, f.domain().lo);
  hi = std::min(hi, f.domain().hi);
  if (!(hi > lo) || !std::isfinite(hi - lo)) return out;
  Xoshiro256 rng(SeededStream{seed, 0});
  for (std::size_t k = 0; k < probes; ++k) {
    const double a = lo + rng.uniform() * (hi - lo);
    const double b = lo + rng.uniform() * (hi - lo);
    if (!f.domain().contains(a) || !f.domain().contains(b)) continue;
    const double fa = f(a);
    const double fb = f(b);
    const double excess = f(0.5 * (a + b)) - 0.5 * (fa + fb);
    const double scale = std::max({1.0, std::abs(fa), std::abs(fb)});
    ++out.probes;
    out.worst_excess = std::max(out.worst_excess, excess);
    if (excess > 1e-12 * scale) ++out.violations;
  }
  return out;
}

double jensen_gap(const WeightVector& w, std::span<const double> x, const ConvexFunction& f) {
  require_same_size(w.size(), x.size(), "weights and points");
  for (double t : x) {
    if (!f.domain().contains(t)) {
      throw DomainError("point " + std::to_string(t) + " is outside the domain of '" + f.name() + "'");
    }
  }
  const double mean = kernels::dot(w.values(), x) / w.total();
  std::vector<double> terms(x.size());
  if (f.has_divergence()) {
    std::ranges::transform(x, terms.begin(), [&](double t) { return f.divergence(t, mean); });
    return std::max(0.0, kernels::dot(w.values(), terms) / w.total());
  }
  std::ranges::transform(x, terms.begin(), [&](double t) { return f(t); });
  const double avg = kernels::dot(w.values(), terms) / w.total();
  const double at_mean = f(mean);
  double gap = avg - at_mean;
  if (gap < 0.0 && -gap <= kGapClampFactor * std::max(std::abs(avg), std::abs(at_mean))) gap = 0.0;
  return gap;
}

JensenGapComparison jensen_gap_comparison(const WeightVector& alpha, const WeightVector& beta,
                                          std::span<const double> x, const ConvexFunction& f,
                                          JensenOptions options) {
  JensenGapComparison out;
  out.profile = quotient_profile(alpha, beta);
  out.gap_alpha = jensen_gap(alpha, x, f);
  out.gap_beta = jensen_gap(beta, x, f);
  if (options.probe_convexity) {
    const auto [lo, hi] = std::ranges::minmax_element(x);
    const ConvexityProbe probe = probe_convexity(f, *lo, *hi);
    if (probe.violations > 0) throw DomainError("'" + f.name() + "' failed the midpoint convexity probe");
  }
  out.lower = out.profile.min_quotient * out.gap_beta;
  out.upper = out.profile.max_quotient * out.gap_beta;
  return out;
}

EqualityDiagnosis jensen_equality_diagnosis(const WeightVector& alpha, const WeightVector& beta,
                                            std::span<const double> x, double tol) {
  if (!(tol > 0.0)) throw DomainError("equality tolerance must be positive");
  require_same_size(alpha.size(), x.size(), "weights and points");
  const QuotientProfile profile = quotient_profile(alpha, beta);
  EqualityDiagnosis out;
  if (profile.uniform()) {
    out.left_equal = out.right_equal = true;
    return out;
  }
  const double mean = kernels::dot(alpha.values(), x) / alpha.total();
  // Scale by the data magnitude so the test survives shifts x -> x + b.
  double magnitude = 0.0;
  for (double t : x) magnitude = std::max(magnitude, std::abs(t));
  auto off_set_matches = [&](const std::vector<std::size_t>& set) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (std::ranges::binary_search(set, j)) continue;
      if (std::abs(x[j] - mean) > tol * magnitude) return false;
    }
    return true;
  };
  out.forced_value_left = mean;
  out.forced_value_right = mean;
  out.left_equal = off_set_matches(profile.argmin_set);
  out.right_equal = off_set_matches(profile.argmax_set);
  return out;
}

}  // namespace amgm
