#include "amgm/suite.hpp"

#include "amgm/error.hpp"
#include "amgm/holder.hpp"
#include "amgm/inequality.hpp"
#include "amgm/jensen.hpp"
#include "amgm/kernels.hpp"
#include "amgm/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <map>

namespace amgm {

namespace {

double uniform_in(Xoshiro256& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

std::size_t index_below(Xoshiro256& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng.uniform() * static_cast<double>(bound));
}

double exp_draw(Xoshiro256& rng) { return -std::log1p(-rng.uniform()); }

void normalize(std::vector<double>& w) {
  const double total = kernels::sum(w);
  for (double& v : w) v /= total;
}

class Recorder {
 public:
  Recorder(double tolerance, std::vector<SuiteCheck>& checks) : tolerance_(tolerance), checks_(checks) {}

  // One instance of `name`: every adjacent pair in `chain` must be ordered.
  void chain(const std::string& name, std::initializer_list<double> chain) {
    SuiteCheck& c = slot(name);
    ++c.instances;
    double worst = std::numeric_limits<double>::infinity();
    const double* prev = nullptr;
    for (const double& v : chain) {
      if (prev != nullptr) {
        const double scale = std::max(std::abs(*prev), std::abs(v));
        const double margin = scale > 0.0 ? (v - *prev) / scale : 0.0;
        worst = std::min(worst, std::isnan(margin) ? -std::numeric_limits<double>::infinity() : margin);
      }
      prev = &v;
    }
    if (worst < -tolerance_) ++c.violations;
    c.worst_slack = c.instances == 1 ? worst : std::min(c.worst_slack, worst);
  }

 private:
  SuiteCheck& slot(const std::string& name) {
    const auto it = index_.find(name);
    if (it != index_.end()) return checks_[it->second];
    index_.emplace(name, checks_.size());
    checks_.push_back(SuiteCheck{name, 0, 0, 0.0});
    return checks_.back();
  }

  double tolerance_;
  std::vector<SuiteCheck>& checks_;
  std::map<std::string, std::size_t> index_;
};

void check_means(Recorder& rec, Xoshiro256& rng, std::size_t n, WeightRegime wr, DataRegime dr, bool inject_bug) {
  const WeightVector alpha(random_weights(rng, n, wr), WeightOptions{.renormalize = true});
  const WeightVector beta(random_weights(rng, n, kWeightRegimes[index_below(rng, 4)]), WeightOptions{.renormalize = true});
  const DataVector x(random_data(rng, n, dr));

  const MeanSummary s = mean_summary(alpha.values(), alpha.total(), x.values());
  rec.chain("gap_nonnegative", {0.0, s.gap});
  rec.chain("variance_lower_bound", {variance_lower_bound(alpha, x), s.gap});

  const GapComparison g = gap_comparison(alpha, beta, x);
  if (inject_bug) {
    rec.chain("gap_sandwich", {g.profile.max_quotient * g.gap_beta, g.gap_alpha, g.profile.min_quotient * g.gap_beta});
  } else {
    rec.chain("gap_sandwich", {g.lower, g.gap_alpha, g.upper});
  }

  const RatioBounds rb = ratio_bounds(alpha, x);
  rec.chain("ratio_bounds", {rb.lower, rb.ratio, rb.upper});
}

void check_young(Recorder& rec, Xoshiro256& rng, DataRegime dr) {
  const std::vector<double> uv = random_data(rng, 2, dr);
  const ConjugatePair pq = ConjugatePair::from_p(1.0 + std::exp(uniform_in(rng, -3.0, 3.0)));
  const YoungBounds y = young_refinement(uv[0], uv[1], pq, uniform_in(rng, 0.01, 0.99));
  rec.chain("young_envelope", {y.lower, y.mid, y.upper});
}

void check_holder(Recorder& rec, Xoshiro256& rng, DataRegime dr) {
  const std::size_t atoms = 1 + index_below(rng, 16);
  std::vector<double> masses(atoms);
  for (double& m : masses) m = exp_draw(rng);
  if (dr == DataRegime::zeros && atoms > 1) masses[index_below(rng, atoms)] = 0.0;
  const DiscreteMeasure mu(std::move(masses));
  const std::vector<double> f = random_data(rng, atoms, dr);
  const std::vector<double> g = random_data(rng, atoms, dr);
  const ConjugatePair pq = ConjugatePair::from_p(1.0 + std::exp(uniform_in(rng, -2.0, 2.0)));
  try {
    const HolderEnvelope h = holder_refinement(f, g, mu, pq, uniform_in(rng, 0.01, 0.99));
    rec.chain("holder_envelope", {h.lower, h.inner, h.upper, h.classical});
  } catch (const DegenerateInputError&) {
  }

  const std::size_t k = 2 + index_below(rng, 4);
  std::vector<double> inv(k);
  for (double& v : inv) v = 0.05 + exp_draw(rng);
  normalize(inv);
  std::vector<double> ps(k);
  std::vector<std::vector<double>> fs(k);
  for (std::size_t i = 0; i < k; ++i) {
    ps[i] = 1.0 / inv[i];
    fs[i] = random_data(rng, atoms, dr == DataRegime::wide_range ? DataRegime::plain : dr);
  }
  try {
    const HolderEnvelope h = holder_multi(fs, ps, mu);
    rec.chain("holder_multi_envelope", {h.lower, h.inner, h.upper, h.classical});
  } catch (const DegenerateInputError&) {
  } catch (const DomainError&) {
    // Reciprocal exponents drifted past 1e-12 after the round trip.
  }
}

std::vector<double> jensen_points(Xoshiro256& rng, const std::string& fname, std::size_t n, DataRegime dr) {
  std::vector<double> x = random_data(rng, n, dr);
  if (fname == "exp") {
    for (double& v : x) v = v > 0.0 ? std::log(v) : -20.0;
  } else if (fname == "neg-log") {
    for (double& v : x) v = std::max(v, 1e-8);
  } else if (fname == "square" || fname == "quartic" || fname == "affine") {
    for (double& v : x) {
      if (rng.uniform() < 0.5) v = -v;
    }
  }
  return x;
}

void check_jensen(Recorder& rec, Xoshiro256& rng, const std::vector<ConvexFunction>& catalog, std::size_t n,
                  WeightRegime wr, DataRegime dr) {
  const WeightVector alpha(random_weights(rng, n, wr), WeightOptions{.renormalize = true});
  const WeightVector beta(random_weights(rng, n, kWeightRegimes[index_below(rng, 4)]), WeightOptions{.renormalize = true});
  for (const ConvexFunction& f : catalog) {
    const std::vector<double> x = jensen_points(rng, f.name(), n, dr);
    const JensenGapComparison j = jensen_gap_comparison(alpha, beta, x, f, JensenOptions{.probe_convexity = false});
    rec.chain("jensen_" + f.name(), {j.lower, j.gap_alpha, j.upper});
  }
}

}  // namespace

const char* regime_name(WeightRegime r) noexcept {
  switch (r) {
    case WeightRegime::uniform:
      return "uniform";
    case WeightRegime::dirichlet:
      return "dirichlet";
    case WeightRegime::geometric:
      return "geometric";
    case WeightRegime::near_degenerate:
      return "near_degenerate";
  }
  return "unknown";
}

const char* regime_name(DataRegime r) noexcept {
  switch (r) {
    case DataRegime::plain:
      return "plain";
    case DataRegime::zeros:
      return "zeros";
    case DataRegime::wide_range:
      return "wide_range";
    case DataRegime::near_constant:
      return "near_constant";
  }
  return "unknown";
}

std::vector<double> random_weights(Xoshiro256& rng, std::size_t n, WeightRegime regime) {
  std::vector<double> w(n);
  switch (regime) {
    case WeightRegime::uniform:
      std::ranges::fill(w, 1.0 / static_cast<double>(n));
      return w;
    case WeightRegime::dirichlet:
      for (double& v : w) {
        do {
          v = exp_draw(rng);
        } while (v == 0.0);
      }
      break;
    case WeightRegime::geometric: {
      const double log_rho = std::log(uniform_in(rng, 0.5, 1.0));
      for (std::size_t i = 0; i < n; ++i) w[i] = std::exp(static_cast<double>(i) * log_rho);
      break;
    }
    case WeightRegime::near_degenerate:
      if (rng.uniform() < 0.5) {
        // One weight carries almost all the mass.
        for (double& v : w) v = 1e-9 * uniform_in(rng, 0.5, 1.5);
        w[index_below(rng, n)] = 1.0;
      } else {
        // Nearly uniform: quotients differ by about 1e-10.
        for (double& v : w) v = 1.0 + 1e-10 * uniform_in(rng, -1.0, 1.0);
      }
      break;
  }
  normalize(w);
  return w;
}

std::vector<double> random_data(Xoshiro256& rng, std::size_t n, DataRegime regime) {
  std::vector<double> x(n);
  switch (regime) {
    case DataRegime::plain:
      for (double& v : x) v = exp_draw(rng);
      break;
    case DataRegime::zeros: {
      for (double& v : x) v = rng.uniform() < 1.0 / 3.0 ? 0.0 : exp_draw(rng);
      double& keep = x[index_below(rng, n)];
      if (keep == 0.0) keep = 0.5 + exp_draw(rng);
      break;
    }
    case DataRegime::wide_range:
      for (double& v : x) v = std::pow(10.0, uniform_in(rng, -8.0, 8.0));
      break;
    case DataRegime::near_constant: {
      const double c = std::pow(10.0, uniform_in(rng, -3.0, 3.0));
      for (double& v : x) v = c * (1.0 + 1e-9 * uniform_in(rng, -1.0, 1.0));
      break;
    }
  }
  return x;
}

bool SuiteReport::passed() const noexcept { return total_violations() == 0; }

std::size_t SuiteReport::total_violations() const noexcept {
  std::size_t total = 0;
  for (const SuiteCheck& c : checks) total += c.violations;
  return total;
}

SuiteReport run_inequality_suite(std::size_t trials, SeededStream stream, SuiteOptions options) {
  if (options.max_dimension < 2) throw ConfigError("suite needs max_dimension >= 2");
  SuiteReport report;
  report.trials = trials;
  Recorder rec(options.tolerance, report.checks);
  std::vector<ConvexFunction> catalog;
  for (const std::string& name : convex_catalog()) catalog.push_back(make_convex_function(name));

  for (std::size_t t = 0; t < trials; ++t) {
    Xoshiro256 rng(stream.offset(t));
    const WeightRegime wr = kWeightRegimes[t % 4];
    const DataRegime dr = kDataRegimes[(t / 4) % 4];
    const std::size_t n = 2 + index_below(rng, options.max_dimension - 1);
    check_means(rec, rng, n, wr, dr, options.inject_bug);
    check_young(rec, rng, dr);
    check_holder(rec, rng, dr);
    check_jensen(rec, rng, catalog, std::min<std::size_t>(n, 16), wr, dr);
  }
  return report;
}

}  // namespace amgm
