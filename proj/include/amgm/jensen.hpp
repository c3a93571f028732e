#pragma once

// Jensen-gap comparison for a convex function f on a real interval:
//
//   min_k(a_k/b_k) J_b <= J_a <= max_k(a_k/b_k) J_b,
//   J_w = sum_i w_i f(x_i) - f(sum_i w_i x_i).
//
// Sample points are plain reals here (not DataVector): data in log
// coordinates is routinely negative.

#include "amgm/inequality.hpp"
#include "amgm/vectors.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace amgm {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = true;
  bool hi_open = true;

  bool contains(double t) const noexcept;
};

/// A user-supplied convex function with its domain.
///
/// An optional Bregman divergence D(x, m) = f(x) - f(m) - f'(m)(x - m) lets
/// jensen_gap sum nonnegative terms instead of subtracting two nearly equal
/// numbers. Every catalog function provides one.
class ConvexFunction {
 public:
  using Evaluator = std::function<double(double)>;
  using Divergence = std::function<double(double x, double m)>;

  ConvexFunction(std::string name, Evaluator f, Interval domain, bool strict, Divergence divergence = {});

  double operator()(double t) const { return f_(t); }
  const std::string& name() const noexcept { return name_; }
  const Interval& domain() const noexcept { return domain_; }
  bool strict() const noexcept { return strict_; }
  bool has_divergence() const noexcept { return static_cast<bool>(divergence_); }
  double divergence(double x, double m) const { return divergence_(x, m); }

 private:
  std::string name_;
  Evaluator f_;
  Interval domain_;
  bool strict_;
  Divergence divergence_;
};

/// Catalog names: exp, square, quartic, neg-log, xlogx, and affine (f(t) = t,
/// not strictly convex). Throws DomainError for unknown names.
ConvexFunction make_convex_function(std::string_view name);
std::vector<std::string> convex_catalog();

struct ConvexityProbe {
  std::size_t probes = 0;
  std::size_t violations = 0;
  double worst_excess = 0.0;  ///< largest f(mid) - (f(a)+f(b))/2 seen
};

/// Checks f((a+b)/2) <= (f(a)+f(b))/2 + 1e-12 * scale on random pairs drawn
/// from [lo, hi] intersected with f's domain. A probe, not a proof.
ConvexityProbe probe_convexity(const ConvexFunction& f, double lo, double hi, std::size_t probes = 64,
                               std::uint64_t seed = 0x5eedULL);

struct JensenOptions {
#ifdef NDEBUG
  bool probe_convexity = false;
#else
  bool probe_convexity = true;
#endif
};

struct JensenGapComparison {
  double gap_alpha = 0.0;
  double gap_beta = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  QuotientProfile profile;
};

/// sum w_i f(x_i) - f(sum w_i x_i), clamped at zero like amgm_gap.
/// Throws DomainError if a point lies outside f's domain.
double jensen_gap(const WeightVector& w, std::span<const double> x, const ConvexFunction& f);

/// Throws DomainError on domain violations, or if the convexity probe
/// (when enabled) fails on the data's range.
JensenGapComparison jensen_gap_comparison(const WeightVector& alpha, const WeightVector& beta,
                                          std::span<const double> x, const ConvexFunction& f,
                                          JensenOptions options = {});

/// Equality conditions for a strictly convex f: left equality iff every
/// x_j off A equals sum_i alpha_i x_i, right equality likewise off B. The
/// conditions do not involve f; for a non-strict f they are sufficient but
/// not necessary.
EqualityDiagnosis jensen_equality_diagnosis(const WeightVector& alpha, const WeightVector& beta,
                                            std::span<const double> x, double tol = kDefaultEqualityTolerance);

}  // namespace amgm
