#include "amgm/experiment.hpp"

#include "amgm/error.hpp"
#include "amgm/inequality.hpp"
#include "amgm/kernels.hpp"
#include "amgm/sampling.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace amgm {

namespace {

constexpr std::uint64_t kWeightStreamTag = 1ULL << 63;
constexpr double kSandwichSlack = 1e-12;

double parse_real(std::string_view text, const char* what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct TrialOutcome {
  double statistic = 0.0;
  bool hit = false;
  bool boundary = false;
  bool unweighted_hit = false;
  bool implication_violation = false;
  bool sandwich_violation = false;
};

struct Event {
  double left = 0.0;
  double right = 0.0;
};

TrialOutcome run_trial(ExperimentKind kind, const ExperimentConfig& cfg, std::size_t n, std::size_t t,
                       const WeightVector* alpha, Event event, Event unweighted, std::vector<double>& x) {
  Xoshiro256 rng(SeededStream{cfg.base_seed, (static_cast<std::uint64_t>(n) << 32) | t});
  fill_exponential(x, cfg.lambda, rng);

  const MeanSummary equal = mean_summary({}, static_cast<double>(n), x);
  const double r = equal.am > 0.0 ? equal.gm / equal.am : 0.0;

  TrialOutcome out;
  out.unweighted_hit = unweighted.left < r && r < unweighted.right;
  switch (kind) {
    case ExperimentKind::ratio:
      out.statistic = r;
      break;
    case ExperimentKind::gap: {
      const MeanSummary w = mean_summary(alpha->values(), alpha->total(), x);
      const double l1 = kernels::sum(x);
      out.statistic = l1 > 0.0 ? w.gap / l1 : 0.0;
      break;
    }
    case ExperimentKind::wratio: {
      const MeanSummary w = mean_summary(alpha->values(), alpha->total(), x);
      out.statistic = w.am > 0.0 ? w.gm / w.am : 0.0;
      const double dn = static_cast<double>(n);
      const double lo = power_log_domain(r, dn * alpha->max());
      const double hi = power_log_domain(r, dn * alpha->min());
      out.sandwich_violation = lo > out.statistic * (1.0 + kSandwichSlack) ||
                               out.statistic > hi * (1.0 + kSandwichSlack);
      break;
    }
  }
  out.hit = event.left < out.statistic && out.statistic < event.right;
  out.boundary = out.statistic == event.left || out.statistic == event.right;
  if (kind == ExperimentKind::gap) out.implication_violation = out.unweighted_hit && !out.hit;
  return out;
}

Event event_for(ExperimentKind kind, double epsilon, std::size_t n, const WeightVector* alpha) {
  const double e = kExpNegEulerGamma;
  switch (kind) {
    case ExperimentKind::ratio:
      return {(1.0 - epsilon) * e, (1.0 + epsilon) * e};
    case ExperimentKind::gap:
      return {(1.0 - (1.0 + epsilon) * e) * alpha->min(), (1.0 - (1.0 - epsilon) * e) * alpha->max()};
    case ExperimentKind::wratio: {
      const double dn = static_cast<double>(n);
      return {(1.0 - epsilon) * std::exp(-dn * alpha->max() * kEulerGamma),
              (1.0 + epsilon) * std::exp(-dn * alpha->min() * kEulerGamma)};
    }
  }
  return {};
}

ExperimentResult run_dimension(ExperimentKind kind, const ExperimentConfig& cfg, std::size_t n) {
  std::optional<WeightVector> alpha;
  if (kind != ExperimentKind::ratio) alpha.emplace(weights_for(cfg.scheme, n, cfg.base_seed));
  const WeightVector* a = alpha ? &*alpha : nullptr;
  const Event event = event_for(kind, cfg.epsilon, n, a);
  const Event unweighted = event_for(ExperimentKind::ratio, cfg.epsilon, n, nullptr);

  std::vector<TrialOutcome> outcomes(cfg.trials);
  unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.trials));
  {
    std::vector<std::jthread> pool;
    const std::size_t block = (cfg.trials + workers - 1) / workers;
    for (unsigned k = 0; k < workers; ++k) {
      const std::size_t begin = k * block;
      const std::size_t end = std::min(cfg.trials, begin + block);
      pool.emplace_back([&, begin, end] {
        std::vector<double> x(n);
        for (std::size_t t = begin; t < end; ++t) outcomes[t] = run_trial(kind, cfg, n, t, a, event, unweighted, x);
      });
    }
  }

  ExperimentResult res;
  res.n = n;
  res.trials = cfg.trials;
  res.epsilon = cfg.epsilon;
  res.lambda = cfg.lambda;
  res.scheme = kind == ExperimentKind::ratio ? "uniform" : cfg.scheme.label();
  res.bound_left = event.left;
  res.bound_right = event.right;
  res.base_seed = cfg.base_seed;
  res.stream_first = static_cast<std::uint64_t>(n) << 32;
  res.stream_last = res.stream_first | (cfg.trials - 1);

  std::vector<double> stats(cfg.trials);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const TrialOutcome& o = outcomes[t];
    stats[t] = o.statistic;
    hits += o.hit;
    res.boundary_hits += o.boundary;
    res.unweighted_hits += o.unweighted_hit;
    res.implication_violations += o.implication_violation;
    res.sandwich_violations += o.sandwich_violation;
    if (cfg.keep_trial_events) res.trial_events.push_back(o.hit ? 1 : 0);
  }
  const double dt = static_cast<double>(cfg.trials);
  res.hit_fraction = static_cast<double>(hits) / dt;
  res.mean_ratio = kernels::sum(stats) / dt;
  std::ranges::sort(stats);
  res.q01 = sorted_quantile(stats, 0.01);
  res.q50 = sorted_quantile(stats, 0.50);
  res.q99 = sorted_quantile(stats, 0.99);
  res.exceedance = static_cast<double>(cfg.trials - hits) / dt;
  res.k_hat = res.exceedance == 0.0 ? std::numeric_limits<double>::infinity()
                                    : -std::log(res.exceedance) / std::log(static_cast<double>(n));
  return res;
}

}  // namespace

WeightScheme WeightScheme::parse(std::string_view text) {
  WeightScheme s;
  if (text == "uniform") return s;
  if (text == "dirichlet" || text == "dirichlet_random") {
    s.kind = Kind::dirichlet_random;
    return s;
  }
  if (text == "explicit") {
    s.kind = Kind::explicit_weights;
    return s;
  }
  std::string_view rho;
  if (text.starts_with("geometric:")) {
    rho = text.substr(10);
  } else if (text.starts_with("geometric_decay(") && text.ends_with(")")) {
    rho = text.substr(16, text.size() - 17);
  } else if (text == "geometric" || text == "geometric_decay") {
    s.kind = Kind::geometric_decay;
    return s;
  } else {
    throw ConfigError("unknown weight scheme '" + std::string(text) + "'");
  }
  s.kind = Kind::geometric_decay;
  s.rho = parse_real(rho, "decay rate");
  if (!(s.rho > 0.0) || !std::isfinite(s.rho)) throw ConfigError("decay rate must be finite and > 0");
  return s;
}

std::string WeightScheme::label() const {
  switch (kind) {
    case Kind::uniform:
      return "uniform";
    case Kind::dirichlet_random:
      return "dirichlet_random";
    case Kind::geometric_decay: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "geometric_decay(%.17g)", rho);
      return buf;
    }
    case Kind::explicit_weights:
      return "explicit";
  }
  return "unknown";
}

std::vector<double> load_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open weights file '" + path + "'");
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    try {
      values.push_back(parse_real(s, "weight"));
    } catch (const ConfigError&) {
      throw ConfigError("weights file '" + path + "' line " + std::to_string(lineno) + ": not a number");
    }
  }
  if (values.empty()) throw ConfigError("weights file '" + path + "' is empty");
  return values;
}

WeightVector weights_for(const WeightScheme& scheme, std::size_t n, std::uint64_t base_seed) {
  if (n < 2) throw ConfigError("dimension must be >= 2");
  switch (scheme.kind) {
    case WeightScheme::Kind::uniform:
      return WeightVector::uniform(n);
    case WeightScheme::Kind::geometric_decay: {
      std::vector<double> w(n);
      const double log_rho = std::log(scheme.rho);
      for (std::size_t i = 0; i < n; ++i) w[i] = std::exp(static_cast<double>(i) * log_rho);
      if (std::ranges::find(w, 0.0) != w.end() || std::ranges::find(w, HUGE_VAL) != w.end()) {
        throw ConfigError("geometric decay weights under/overflow at n = " + std::to_string(n));
      }
      const double total = kernels::sum(w);
      for (double& v : w) v /= total;
      return WeightVector(std::move(w), WeightOptions{.renormalize = true});
    }
    case WeightScheme::Kind::dirichlet_random: {
      Xoshiro256 rng(SeededStream{base_seed, kWeightStreamTag | n});
      std::vector<double> w(n);
      do {
        fill_exponential(w, 1.0, rng);
      } while (std::ranges::find(w, 0.0) != w.end());
      const double total = kernels::sum(w);
      for (double& v : w) v /= total;
      return WeightVector(std::move(w), WeightOptions{.renormalize = true});
    }
    case WeightScheme::Kind::explicit_weights:
      if (scheme.explicit_values.size() != n) {
        throw ConfigError("explicit weights have length " + std::to_string(scheme.explicit_values.size()) +
                          " but n = " + std::to_string(n));
      }
      return WeightVector(scheme.explicit_values, WeightOptions{.renormalize = true});
  }
  throw ConfigError("unknown weight scheme");
}

std::vector<std::string> ExperimentConfig::validate() const {
  std::vector<std::string> warnings;
  if (n_values.empty()) throw ConfigError("no dimensions given");
  for (std::size_t n : n_values) {
    if (n < 2) throw ConfigError("every n must be >= 2");
    if (n >= (1ULL << 31)) throw ConfigError("n is too large for the stream layout");
  }
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (trials >= (1ULL << 32)) throw ConfigError("trials is too large for the stream layout");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in [0, 1)");
  if (epsilon == 0.0) warnings.emplace_back("epsilon = 0: the event interval is empty or degenerate");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("lambda must be finite and > 0");
  return warnings;
}

std::string_view experiment_name(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::ratio:
      return "ratio";
    case ExperimentKind::gap:
      return "gap";
    case ExperimentKind::wratio:
      return "wratio";
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view text) {
  if (text == "ratio") return ExperimentKind::ratio;
  if (text == "gap") return ExperimentKind::gap;
  if (text == "wratio") return ExperimentKind::wratio;
  throw ConfigError("unknown experiment '" + std::string(text) + "' (expected ratio, gap or wratio)");
}

std::vector<ExperimentResult> run_experiment(ExperimentKind kind, const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<ExperimentResult> out;
  out.reserve(cfg.n_values.size());
  for (std::size_t n : cfg.n_values) out.push_back(run_dimension(kind, cfg, n));
  return out;
}

std::vector<ExperimentResult> ratio_concentration_experiment(const ExperimentConfig& cfg) {
  return run_experiment(ExperimentKind::ratio, cfg);
}

std::vector<ExperimentResult> weighted_gap_experiment(const ExperimentConfig& cfg) {
  return run_experiment(ExperimentKind::gap, cfg);
}

std::vector<ExperimentResult> weighted_ratio_experiment(const ExperimentConfig& cfg) {
  return run_experiment(ExperimentKind::wratio, cfg);
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double sorted_quantile(const std::vector<double>& sorted, double prob) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double pos = prob * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

void write_csv(std::ostream& out, const std::vector<ExperimentResult>& results) {
  out << "n,trials,epsilon,lambda,scheme,hit_fraction,mean_ratio,q01,q50,q99,bound_left,bound_right,base_seed\n";
  for (const ExperimentResult& r : results) {
    out << r.n << ',' << r.trials << ',' << format_real(r.epsilon) << ',' << format_real(r.lambda) << ','
        << r.scheme << ',' << format_real(r.hit_fraction) << ',' << format_real(r.mean_ratio) << ','
        << format_real(r.q01) << ',' << format_real(r.q50) << ',' << format_real(r.q99) << ','
        << format_real(r.bound_left) << ',' << format_real(r.bound_right) << ',' << r.base_seed << '\n';
  }
}

void write_json(std::ostream& out, ExperimentKind kind, const ExperimentConfig& cfg,
                const std::vector<ExperimentResult>& results) {
  using nlohmann::json;
  json doc;
  doc["experiment"] = experiment_name(kind);
  doc["kernel_isa"] = kernels::isa_name(kernels::active_isa());
  doc["config"] = {{"n_values", cfg.n_values}, {"trials", cfg.trials},   {"epsilon", cfg.epsilon},
                   {"lambda", cfg.lambda},     {"base_seed", cfg.base_seed}, {"scheme", cfg.scheme.label()}};
  json rows = json::array();
  for (const ExperimentResult& r : results) {
    json row = {{"n", r.n},
                {"trials", r.trials},
                {"epsilon", r.epsilon},
                {"lambda", r.lambda},
                {"scheme", r.scheme},
                {"hit_fraction", r.hit_fraction},
                {"mean_ratio", r.mean_ratio},
                {"q01", r.q01},
                {"q50", r.q50},
                {"q99", r.q99},
                {"bound_left", r.bound_left},
                {"bound_right", r.bound_right},
                {"base_seed", r.base_seed},
                {"stream_first", r.stream_first},
                {"stream_last", r.stream_last},
                {"boundary_hits", r.boundary_hits},
                {"unweighted_hits", r.unweighted_hits},
                {"implication_violations", r.implication_violations},
                {"sandwich_violations", r.sandwich_violations},
                {"exceedance", r.exceedance}};
    row["k_hat"] = std::isfinite(r.k_hat) ? json(r.k_hat) : json("inf");
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace amgm
