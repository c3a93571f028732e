#include "amgm/holder.hpp"

#include "amgm/error.hpp"
#include "amgm/inequality.hpp"
#include "amgm/kernels.hpp"
#include "amgm/vectors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace amgm {

namespace {

constexpr double kExponentTolerance = 1e-12;

void require_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie strictly inside (0, 1)");
}

void require_function(std::span<const double> f, const DiscreteMeasure& mu, const char* what) {
  require_same_size(f.size(), mu.size(), what);
  for (double v : f) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError(std::string(what) + ": values must be finite and >= 0");
  }
}

// w a + (1 - w) b - a^w b^(1-w), a, b >= 0.
double two_point_gap(double w, double a, double b) {
  const std::array<double, 2> weights{w, 1.0 - w};
  const std::array<double, 2> x{a, b};
  return mean_summary(weights, weights[0] + weights[1], x).gap;
}

struct Normalized {
  std::vector<double> values;  // f^p / integral(f^p)
  double integral = 0.0;
  double norm = 0.0;
};

Normalized normalize_power(std::span<const double> f, double p, const DiscreteMeasure& mu, const char* what) {
  Normalized out;
  out.values.resize(f.size());
  std::ranges::transform(f, out.values.begin(), [p](double v) { return power_log_domain(v, p); });
  out.integral = kernels::dot(mu.masses(), out.values);
  if (!(out.integral > 0.0)) throw DegenerateInputError(std::string(what) + " has zero norm under the measure");
  for (double& v : out.values) v /= out.integral;
  out.norm = power_log_domain(out.integral, 1.0 / p);
  return out;
}

HolderEnvelope assemble(double classical, double inner, double deficit, double c_min, double c_max) {
  HolderEnvelope env;
  env.classical = classical;
  env.inner = inner;
  env.coupling = std::clamp(1.0 - deficit, 0.0, 1.0);
  env.lower = classical * (1.0 - c_max * deficit);
  env.upper = classical * (1.0 - c_min * deficit);
  return env;
}

}  // namespace

ConjugatePair::ConjugatePair(double p, double q) : p_(p), q_(q) {
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("conjugate exponents must be finite and > 1");
  }
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > kExponentTolerance) throw DomainError("1/p + 1/q must equal 1");
}

ConjugatePair ConjugatePair::from_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("exponent p must be finite and > 1");
  return ConjugatePair(p, p / (p - 1.0));
}

DiscreteMeasure::DiscreteMeasure(std::vector<double> masses) : masses_(std::move(masses)) {
  if (masses_.empty()) throw DimensionError("measure needs at least one atom");
  for (double m : masses_) {
    if (!std::isfinite(m) || m < 0.0) throw DomainError("atom masses must be finite and >= 0");
  }
  if (!(kernels::sum(masses_) > 0.0)) throw DegenerateInputError("measure is identically zero");
}

YoungBounds young_refinement(double u, double v, const ConjugatePair& pq, double beta) {
  require_beta(beta);
  if (!(u >= 0.0) || !(v >= 0.0) || !std::isfinite(u) || !std::isfinite(v)) {
    throw DomainError("u and v must be finite and >= 0");
  }
  const double p = pq.p();
  const double q = pq.q();
  const double a = power_log_domain(u, p);
  const double b = power_log_domain(v, q);
  const double bracket = two_point_gap(beta, a, b);
  const double c1 = 1.0 / (beta * p);
  const double c2 = 1.0 / ((1.0 - beta) * q);
  YoungBounds out;
  out.mid = two_point_gap(1.0 / p, a, b);
  out.lower = std::min(c1, c2) * bracket;
  out.upper = std::max(c1, c2) * bracket;
  return out;
}

HolderEnvelope holder_refinement(std::span<const double> f, std::span<const double> g, const DiscreteMeasure& mu,
                                 const ConjugatePair& pq, double beta) {
  require_beta(beta);
  require_function(f, mu, "f");
  require_function(g, mu, "g");
  const Normalized a = normalize_power(f, pq.p(), mu, "f");
  const Normalized b = normalize_power(g, pq.q(), mu, "g");

  std::vector<double> scratch(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) scratch[i] = f[i] * g[i];
  const double inner = kernels::dot(mu.masses(), scratch);
  for (std::size_t i = 0; i < f.size(); ++i) scratch[i] = two_point_gap(beta, a.values[i], b.values[i]);
  const double deficit = kernels::dot(mu.masses(), scratch);

  const double c1 = 1.0 / (beta * pq.p());
  const double c2 = 1.0 / ((1.0 - beta) * pq.q());
  return assemble(a.norm * b.norm, inner, deficit, std::min(c1, c2), std::max(c1, c2));
}

double angular_distance(std::span<const double> f, std::span<const double> g, const DiscreteMeasure& mu,
                        const ConjugatePair& pq) {
  require_function(f, mu, "f");
  require_function(g, mu, "g");
  const Normalized a = normalize_power(f, pq.p(), mu, "f");
  const Normalized b = normalize_power(g, pq.q(), mu, "g");
  std::vector<double> sq(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = std::sqrt(a.values[i]) - std::sqrt(b.values[i]);
    sq[i] = d * d;
  }
  return std::sqrt(kernels::dot(mu.masses(), sq));
}

HolderEnvelope holder_multi(const std::vector<std::vector<double>>& fs, std::span<const double> ps,
                            const DiscreteMeasure& mu) {
  const std::size_t n = fs.size();
  if (n < 2) throw DimensionError("holder_multi needs at least two functions");
  require_same_size(ps.size(), n, "functions and exponents");
  std::vector<double> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(ps[i] > 1.0) || !std::isfinite(ps[i])) throw DomainError("every exponent must be finite and > 1");
    inverse[i] = 1.0 / ps[i];
  }
  if (std::abs(kernels::sum(inverse) - 1.0) > kExponentTolerance) {
    throw DomainError("reciprocal exponents must sum to 1");
  }

  std::vector<Normalized> parts;
  parts.reserve(n);
  double classical = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    require_function(fs[i], mu, "function");
    parts.push_back(normalize_power(fs[i], ps[i], mu, "function"));
    classical *= parts.back().norm;
  }

  const std::size_t atoms = mu.size();
  std::vector<double> product(atoms, 1.0);
  std::vector<double> gaps(atoms);
  std::vector<double> column(n);
  for (std::size_t j = 0; j < atoms; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      product[j] *= fs[i][j];
      column[i] = parts[i].values[j];
    }
    gaps[j] = mean_summary({}, static_cast<double>(n), column).gap;
  }
  const double inner = kernels::dot(mu.masses(), product);
  const double deficit = kernels::dot(mu.masses(), gaps);
  const auto [lo, hi] = std::ranges::minmax_element(inverse);
  const double dn = static_cast<double>(n);
  return assemble(classical, inner, deficit, dn * *lo, dn * *hi);
}

}  // namespace amgm
