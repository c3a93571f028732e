#pragma once

// Monte Carlo concentration experiments for the GM/AM ratio and the
// weighted AM-GM gap under iid exponential coordinates.
//
// Trial t at dimension n draws its coordinates from
//   SeededStream{base_seed, (n << 32) | t},
// so every experiment kind sees the same samples for the same
// (base_seed, n, t) and results do not depend on the thread count.
// Random weights for dimension n come from
//   SeededStream{base_seed, 2^63 | n}.

#include "amgm/rng.hpp"
#include "amgm/vectors.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace amgm {

/// e^{-gamma}, gamma the Euler-Mascheroni constant.
inline constexpr double kExpNegEulerGamma = 0.56145948356688516982;
inline constexpr double kEulerGamma = 0.57721566490153286061;

struct WeightScheme {
  enum class Kind { uniform, dirichlet_random, geometric_decay, explicit_weights };

  Kind kind = Kind::uniform;
  double rho = 0.999;                 ///< geometric_decay only
  std::vector<double> explicit_values;///< explicit_weights only

  /// "uniform", "dirichlet", "dirichlet_random", "geometric:<rho>",
  /// "geometric_decay(<rho>)", or "explicit" (values loaded from a file).
  static WeightScheme parse(std::string_view text);
  std::string label() const;
};

/// One weight per line; blank lines and lines starting with '#' are
/// skipped. Throws ConfigError on malformed content.
std::vector<double> load_weights_file(const std::string& path);

/// Weights alpha_{., n} for the scheme. Throws ConfigError if an explicit
/// vector has the wrong length, WeightError if it does not sum to 1.
WeightVector weights_for(const WeightScheme& scheme, std::size_t n, std::uint64_t base_seed);

struct ExperimentConfig {
  std::vector<std::size_t> n_values;
  std::size_t trials = 200;
  double epsilon = 0.05;
  double lambda = 1.0;
  std::uint64_t base_seed = 0;
  WeightScheme scheme;
  std::string output_path;
  unsigned threads = 0;             ///< 0: hardware concurrency
  bool keep_trial_events = false;   ///< fill ExperimentResult::trial_events

  /// Throws ConfigError on violations; returns warnings (e.g. epsilon = 0).
  std::vector<std::string> validate() const;
};

enum class ExperimentKind { ratio, gap, wratio };

std::string_view experiment_name(ExperimentKind kind) noexcept;
ExperimentKind parse_experiment_kind(std::string_view text);

struct ExperimentResult {
  std::size_t n = 0;
  std::size_t trials = 0;
  double epsilon = 0.0;
  double lambda = 0.0;
  std::string scheme;
  double hit_fraction = 0.0;
  /// Mean and quantiles of the per-trial statistic: r_n for ratio,
  /// gap_alpha / ||x||_1 for gap, GM_alpha / AM_alpha for wratio.
  double mean_ratio = 0.0;
  double q01 = 0.0;
  double q50 = 0.0;
  double q99 = 0.0;
  double bound_left = 0.0;
  double bound_right = 0.0;
  std::uint64_t base_seed = 0;
  std::uint64_t stream_first = 0;
  std::uint64_t stream_last = 0;

  // Diagnostics.
  std::size_t boundary_hits = 0;        ///< statistic exactly on an endpoint
  std::size_t unweighted_hits = 0;      ///< trials inside the equal-weights r_n event
  std::size_t implication_violations = 0; ///< gap: unweighted event held, weighted failed
  std::size_t sandwich_violations = 0;  ///< wratio: r^{n a_max} <= ratio <= r^{n a_min} failed
  double exceedance = 0.0;              ///< 1 - hit_fraction
  double k_hat = 0.0;                   ///< -ln(exceedance) / ln n, +inf when exceedance is 0
  std::vector<std::uint8_t> trial_events;
};

std::vector<ExperimentResult> run_experiment(ExperimentKind kind, const ExperimentConfig& cfg);

std::vector<ExperimentResult> ratio_concentration_experiment(const ExperimentConfig& cfg);
std::vector<ExperimentResult> weighted_gap_experiment(const ExperimentConfig& cfg);
std::vector<ExperimentResult> weighted_ratio_experiment(const ExperimentConfig& cfg);

/// Header: n,trials,epsilon,lambda,scheme,hit_fraction,mean_ratio,q01,q50,
/// q99,bound_left,bound_right,base_seed. Reals use 17 significant digits.
void write_csv(std::ostream& out, const std::vector<ExperimentResult>& results);
void write_json(std::ostream& out, ExperimentKind kind, const ExperimentConfig& cfg,
                const std::vector<ExperimentResult>& results);

/// printf("%.17g"), with "inf"/"-inf"/"nan" spelled out.
std::string format_real(double v);

/// Linear-interpolation quantile of sorted data (numpy's default rule).
double sorted_quantile(const std::vector<double>& sorted, double prob);

}  // namespace amgm
