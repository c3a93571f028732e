#include "amgm/sampling.hpp"

#include "amgm/error.hpp"
#include "amgm/inequality.hpp"
#include "amgm/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace amgm {

namespace {

void require_dimension(std::size_t n) {
  if (n < 2) throw DimensionError("sample dimension must be >= 2");
}

// One Exp(1) variate per uniform.
double standard_exponential(Xoshiro256& rng) noexcept { return -std::log1p(-rng.uniform()); }

}  // namespace

GeometryConstants GeometryConstants::for_dimension(int n) {
  if (n < 2) throw DimensionError("geometry constants need n >= 2");
  GeometryConstants g;
  g.n = n;
  const double dn = static_cast<double>(n);
  if (n <= 20) {
    double gamma_n = 1.0;  // (n-1)!
    for (int k = 2; k < n; ++k) gamma_n *= k;
    const double pow2 = std::ldexp(1.0, n);
    g.ball_volume = pow2 / (gamma_n * dn);
    g.sphere_area = pow2 * std::sqrt(dn) / gamma_n;
  } else {
    const double log2n = dn * std::log(2.0);
    g.ball_volume = std::exp(log2n - std::lgamma(dn + 1.0));
    g.sphere_area = std::exp(log2n + 0.5 * std::log(dn) - std::lgamma(dn));
  }
  return g;
}

void fill_exponential(std::span<double> out, double lambda, Xoshiro256& rng) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be finite and > 0");
  for (double& v : out) v = standard_exponential(rng) / lambda;
}

DataVector sample_exponential(std::size_t n, double lambda, SeededStream stream) {
  require_dimension(n);
  Xoshiro256 rng(stream);
  std::vector<double> x(n);
  fill_exponential(x, lambda, rng);
  return DataVector(std::move(x));
}

DataVector sample_l1_sphere_positive(std::size_t n, SeededStream stream) {
  require_dimension(n);
  Xoshiro256 rng(stream);
  std::vector<double> x(n);
  double total = 0.0;
  do {
    fill_exponential(x, 1.0, rng);
    total = kernels::sum(x);
  } while (!(total > 0.0));
  for (double& v : x) v /= total;
  const double again = kernels::sum(x);
  for (double& v : x) v /= again;
  return DataVector(std::move(x));
}

std::vector<double> sample_simplex_spacings(std::size_t n, SeededStream stream) {
  require_dimension(n);
  Xoshiro256 rng(stream);
  std::vector<double> cuts(n - 1);
  for (double& c : cuts) c = rng.uniform();
  std::ranges::sort(cuts);
  std::vector<double> x(n);
  double prev = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    x[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  x[n - 1] = 1.0 - prev;
  return x;
}

double gm_am_ratio(std::span<const double> x) {
  require_dimension(x.size());
  const MeanSummary s = mean_summary({}, static_cast<double>(x.size()), x);
  if (!(s.am > 0.0)) throw DegenerateInputError("GM/AM ratio is undefined for identically zero data");
  return s.gm / s.am;
}

double gm_am_ratio(const DataVector& x) { return gm_am_ratio(x.values()); }

SamplerEquivalence sampler_equivalence_check(std::size_t n, std::size_t trials, double u, SeededStream stream,
                                             SphereSampler sphere) {
  require_dimension(n);
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("threshold u must lie in [0, 1]");
  if (trials < 1000) throw DomainError("sampler equivalence needs at least 1000 trials");

  std::size_t hits_exp = 0;
  std::size_t hits_sphere = 0;
  std::vector<double> x(n);
  for (std::size_t t = 0; t < trials; ++t) {
    Xoshiro256 rng(stream.offset(t));
    fill_exponential(x, 1.0, rng);
    if (gm_am_ratio(x) > u) ++hits_exp;

    const SeededStream s = stream.offset(trials + t);
    const double r = sphere == SphereSampler::uniform_spacings ? gm_am_ratio(sample_simplex_spacings(n, s))
                                                                : gm_am_ratio(sample_l1_sphere_positive(n, s));
    if (r > u) ++hits_sphere;
  }
  const double dt = static_cast<double>(trials);
  SamplerEquivalence out;
  out.trials = trials;
  out.p_exponential = static_cast<double>(hits_exp) / dt;
  out.p_sphere = static_cast<double>(hits_sphere) / dt;
  const double pooled = 0.5 * (out.p_exponential + out.p_sphere);
  out.standard_error = std::sqrt(2.0 * pooled * (1.0 - pooled) / dt);
  return out;
}

BallVolumeEstimate ball_volume_mc_check(int n, std::size_t trials, SeededStream stream) {
  if (n < 1 || n > 8) throw DomainError("ball volume check supports 1 <= n <= 8");
  if (trials < 10000) throw DomainError("ball volume check needs at least 10^4 trials");
  Xoshiro256 rng(stream);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::abs(2.0 * rng.uniform() - 1.0);
    if (norm <= 1.0) ++hits;
  }
  BallVolumeEstimate out;
  out.hit_fraction = static_cast<double>(hits) / static_cast<double>(trials);
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  out.expected = 1.0 / factorial;
  out.standard_error = std::sqrt(out.expected * (1.0 - out.expected) / static_cast<double>(trials));
  return out;
}

}  // namespace amgm
