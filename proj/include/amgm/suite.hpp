#pragma once

// Randomized verification harness. Each trial draws one instance per check
// from SeededStream offset t and records the normalized margin
// (rhs - lhs) / max(|lhs|, |rhs|) of every inequality it asserts.

#include "amgm/rng.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace amgm {

enum class WeightRegime { uniform, dirichlet, geometric, near_degenerate };
enum class DataRegime { plain, zeros, wide_range, near_constant };

inline constexpr WeightRegime kWeightRegimes[] = {WeightRegime::uniform, WeightRegime::dirichlet,
                                                  WeightRegime::geometric, WeightRegime::near_degenerate};
inline constexpr DataRegime kDataRegimes[] = {DataRegime::plain, DataRegime::zeros, DataRegime::wide_range,
                                              DataRegime::near_constant};

const char* regime_name(WeightRegime r) noexcept;
const char* regime_name(DataRegime r) noexcept;

/// Positive weights summing to 1 up to rounding; pass them through
/// WeightVector with renormalize enabled.
std::vector<double> random_weights(Xoshiro256& rng, std::size_t n, WeightRegime regime);

/// Nonnegative data. zeros: about a third of the coordinates are 0 (at
/// least one nonzero); wide_range: log-uniform on [1e-8, 1e8];
/// near_constant: c (1 + 1e-9 u) with u uniform on [-1, 1].
std::vector<double> random_data(Xoshiro256& rng, std::size_t n, DataRegime regime);

struct SuiteCheck {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  double worst_slack = 0.0;  ///< smallest normalized margin seen; negative means violated
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  std::size_t trials = 0;

  bool passed() const noexcept;
  std::size_t total_violations() const noexcept;
};

struct SuiteOptions {
  /// Swap the min and max quotient in the gap sandwich; the harness must
  /// then report violations.
  bool inject_bug = false;
  double tolerance = 1e-10;
  std::size_t max_dimension = 64;
};

/// trials = 0 yields an empty, passing report.
SuiteReport run_inequality_suite(std::size_t trials, SeededStream stream, SuiteOptions options = {});

}  // namespace amgm
