#pragma once

// Building blocks shared by the scalar and SIMD kernels. Private header.

#include <cmath>
#include <cstddef>

namespace amgm::kernels::detail {

// Internal linkage: this header is compiled into translation units built
// with different -m flags, so the helpers must not be merged by the linker.
namespace {

// log(1+f) = f - deficit(f) on the reduced range 1+f in [sqrt(1/2), sqrt(2)).
// Coefficients are the classic fdlibm e_log.c minimax set.
inline constexpr double kLg1 = 6.666666666666735130e-01;
inline constexpr double kLg2 = 3.999999999940941908e-01;
inline constexpr double kLg3 = 2.857142874366239149e-01;
inline constexpr double kLg4 = 2.222219843214978396e-01;
inline constexpr double kLg5 = 1.818357216161805012e-01;
inline constexpr double kLg6 = 1.531383769920937332e-01;
inline constexpr double kLg7 = 1.479819860511658591e-01;

inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kSqrt2 = 1.41421356237309504880;

// Reduced-range bounds for t = x/ref - 1.
inline constexpr double kNearLo = 0.70710678118654752440 - 1.0;
inline constexpr double kNearHi = kSqrt2 - 1.0;

inline bool is_near(double t) noexcept { return t >= kNearLo && t < kNearHi; }

/// t - log1p(t) for t in [kNearLo, kNearHi).
inline double deficit_near(double t) noexcept {
  const double s = t / (2.0 + t);
  const double z = s * s;
  const double w = z * z;
  const double t1 = w * (kLg2 + w * (kLg4 + w * kLg6));
  const double t2 = z * (kLg1 + w * (kLg3 + w * (kLg5 + w * kLg7)));
  const double r = t2 + t1;
  const double hfsq = 0.5 * t * t;
  return hfsq - s * (hfsq + r);
}

/// TwoSum-compensated running sum (Ogita-Rump-Oishi Sum2).
struct CompensatedSum {
  double s = 0.0;
  double c = 0.0;

  void add(double t) noexcept {
    const double ns = s + t;
    const double bb = ns - s;
    c += (s - (ns - bb)) + (t - bb);
    s = ns;
  }

  /// Adds a*b including the rounding error of the product (Dot2).
  void add_product(double a, double b) noexcept {
    const double p = a * b;
    add(p);
    c += std::fma(a, b, -p);
  }

  double value() const noexcept { return s + c; }
};

}  // namespace
}  // namespace amgm::kernels::detail
