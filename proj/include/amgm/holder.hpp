#pragma once

// Two-sided refinements of Young's and Hoelder's inequalities on finite
// discrete measures. Functions are given by their values on the atoms of
// the measure; integrals are weighted sums.

#include <cstddef>
#include <span>
#include <vector>

namespace amgm {

/// p, q > 1 with 1/p + 1/q = 1 (to within 1e-12).
class ConjugatePair {
 public:
  ConjugatePair(double p, double q);
  static ConjugatePair from_p(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

 private:
  double p_;
  double q_;
};

/// Nonnegative atom masses, at least one atom, not all zero.
class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(std::vector<double> masses);

  std::span<const double> masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }

 private:
  std::vector<double> masses_;
};

struct YoungBounds {
  double lower = 0.0;
  double mid = 0.0;  ///< u^p/p + v^q/q - uv
  double upper = 0.0;
};

struct HolderEnvelope {
  double classical = 0.0;  ///< product of the norms
  double lower = 0.0;
  double upper = 0.0;
  double inner = 0.0;  ///< || prod f_i ||_1
  /// Normalized cross integral, in [0, 1]. Evaluated as 1 - deficit with
  /// the deficit a sum of nonnegative per-atom AM-GM gaps.
  double coupling = 0.0;
};

/// Bracket between min and max of {1/(beta p), 1/((1-beta) q)} times
/// beta u^p + (1-beta) v^q - u^{beta p} v^{(1-beta) q}.
/// Throws DomainError for beta outside (0,1) or negative u, v.
YoungBounds young_refinement(double u, double v, const ConjugatePair& pq, double beta);

/// Envelope around ||fg||_1 for f, g >= 0 on the atoms of mu.
/// Throws DegenerateInputError if ||f||_p or ||g||_q vanishes.
HolderEnvelope holder_refinement(std::span<const double> f, std::span<const double> g, const DiscreteMeasure& mu,
                                 const ConjugatePair& pq, double beta);

/// || f^{p/2}/||f||_p^{p/2} - g^{q/2}/||g||_q^{q/2} ||_2 under mu.
double angular_distance(std::span<const double> f, std::span<const double> g, const DiscreteMeasure& mu,
                        const ConjugatePair& pq);

/// Several-function version with equal splitting weights: constants
/// n * min(1/p_i) and n * max(1/p_i), n = fs.size() >= 2.
HolderEnvelope holder_multi(const std::vector<std::vector<double>>& fs, std::span<const double> ps,
                            const DiscreteMeasure& mu);

}  // namespace amgm
