#pragma once

// Seeded samplers for the GM/AM concentration experiments and the closed
// forms for the l1 ball and sphere.

#include "amgm/rng.hpp"
#include "amgm/vectors.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace amgm {

/// |B_1^n| = 2^n / n! and |S_1^{n-1}| = 2^n sqrt(n) / Gamma(n).
struct GeometryConstants {
  int n = 0;
  double ball_volume = 0.0;
  double sphere_area = 0.0;

  /// n >= 2. Factorials are exact products for n <= 20; beyond that the
  /// values come from lgamma.
  static GeometryConstants for_dimension(int n);
};

/// Fills out with iid Exp(lambda) draws by inverse transform,
/// x = -log1p(-U) / lambda, consuming one uniform per coordinate.
void fill_exponential(std::span<double> out, double lambda, Xoshiro256& rng);

/// n iid Exp(lambda) draws from the given stream. Draws for different
/// lambda on the same stream differ exactly by the factor lambda.
DataVector sample_exponential(std::size_t n, double lambda, SeededStream stream);

/// Uniform point on the positive face of the l1 sphere (the probability
/// simplex): Exp(1) draws divided by their sum, then renormalized once
/// more. An all-zero draw is redrawn from the same stream.
DataVector sample_l1_sphere_positive(std::size_t n, SeededStream stream);

/// Uniform point on the simplex from the spacings of n-1 sorted uniforms.
/// Shares no arithmetic with the exponential construction.
std::vector<double> sample_simplex_spacings(std::size_t n, SeededStream stream);

/// prod x_i^{1/n} / (sum x_i / n), in [0, 1]. Zero-homogeneous.
/// Throws DegenerateInputError for identically zero input.
double gm_am_ratio(std::span<const double> x);
double gm_am_ratio(const DataVector& x);

enum class SphereSampler { normalized_exponential, uniform_spacings };

struct SamplerEquivalence {
  double p_exponential = 0.0;  ///< empirical P(r_n > u), iid exponential coordinates
  double p_sphere = 0.0;       ///< empirical P(r_n > u), uniform on the sphere face
  double standard_error = 0.0; ///< SE of the difference, pooled binomial
  std::size_t trials = 0;
};

/// Exponential trials use streams stream.offset(t), t < trials; sphere
/// trials use stream.offset(trials + t). u must lie in [0, 1] and
/// trials >= 1000.
SamplerEquivalence sampler_equivalence_check(std::size_t n, std::size_t trials, double u, SeededStream stream,
                                             SphereSampler sphere = SphereSampler::uniform_spacings);

struct BallVolumeEstimate {
  double hit_fraction = 0.0;   ///< estimate of |B_1^n| / 2^n
  double expected = 0.0;       ///< 1 / n!
  double standard_error = 0.0; ///< binomial SE at the expected fraction
};

/// Uniform sampling of [-1, 1]^n, counting points with ||x||_1 <= 1.
/// Requires 1 <= n <= 8 and trials >= 10^4.
BallVolumeEstimate ball_volume_mc_check(int n, std::size_t trials, SeededStream stream);

}  // namespace amgm
