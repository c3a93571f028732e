// AVX2/FMA variants. Built with -mavx2 -mfma; only reached through the
// dispatcher after a cpuid check.

#include "kernel_math.hpp"
#include "kernels_impl.hpp"

#include <immintrin.h>

#include <cfloat>
#include <cstdint>

namespace amgm::kernels {
namespace {

using detail::CompensatedSum;

struct LaneSum {
  __m256d s = _mm256_setzero_pd();
  __m256d c = _mm256_setzero_pd();

  void add(__m256d t) noexcept {
    const __m256d ns = _mm256_add_pd(s, t);
    const __m256d bb = _mm256_sub_pd(ns, s);
    const __m256d e = _mm256_add_pd(_mm256_sub_pd(s, _mm256_sub_pd(ns, bb)), _mm256_sub_pd(t, bb));
    c = _mm256_add_pd(c, e);
    s = ns;
  }

  void add_product(__m256d a, __m256d b) noexcept {
    const __m256d p = _mm256_mul_pd(a, b);
    add(p);
    c = _mm256_add_pd(c, _mm256_fmsub_pd(a, b, p));
  }

  // Folds the four lanes into a scalar accumulator in lane order.
  CompensatedSum reduce() const noexcept {
    alignas(32) double ls[4];
    alignas(32) double lc[4];
    _mm256_store_pd(ls, s);
    _mm256_store_pd(lc, c);
    CompensatedSum acc;
    for (int k = 0; k < 4; ++k) {
      acc.add(ls[k]);
      acc.c += lc[k];
    }
    return acc;
  }
};

inline __m256d deficit_near(__m256d t) noexcept {
  const __m256d s = _mm256_div_pd(t, _mm256_add_pd(_mm256_set1_pd(2.0), t));
  const __m256d z = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z, z);
  __m256d t1 = _mm256_fmadd_pd(w, _mm256_set1_pd(detail::kLg6), _mm256_set1_pd(detail::kLg4));
  t1 = _mm256_fmadd_pd(w, t1, _mm256_set1_pd(detail::kLg2));
  t1 = _mm256_mul_pd(w, t1);
  __m256d t2 = _mm256_fmadd_pd(w, _mm256_set1_pd(detail::kLg7), _mm256_set1_pd(detail::kLg5));
  t2 = _mm256_fmadd_pd(w, t2, _mm256_set1_pd(detail::kLg3));
  t2 = _mm256_fmadd_pd(w, t2, _mm256_set1_pd(detail::kLg1));
  t2 = _mm256_mul_pd(z, t2);
  const __m256d r = _mm256_add_pd(t2, t1);
  const __m256d hfsq = _mm256_mul_pd(_mm256_set1_pd(0.5), _mm256_mul_pd(t, t));
  return _mm256_sub_pd(hfsq, _mm256_mul_pd(s, _mm256_add_pd(hfsq, r)));
}

// Natural log of positive, normal, finite y.
inline __m256d log_normal(__m256d y) noexcept {
  const __m256i bits = _mm256_castpd_si256(y);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
  const __m256i magic_bits = _mm256_set1_epi64x(0x4330000000000000LL);  // 2^52

  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, magic_bits)),
                            _mm256_set1_pd(4503599627370496.0 + 1023.0));

  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(detail::kSqrt2), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

  const __m256d f = _mm256_sub_pd(m, _mm256_set1_pd(1.0));
  const __m256d phi = deficit_near(f);
  const __m256d lo = _mm256_sub_pd(_mm256_sub_pd(phi, _mm256_mul_pd(e, _mm256_set1_pd(detail::kLn2Lo))), f);
  return _mm256_sub_pd(_mm256_mul_pd(e, _mm256_set1_pd(detail::kLn2Hi)), lo);
}

enum class Term { ratio, deficit };

// Per-lane terms for four data points. Lanes whose ratio falls outside the
// normal range are recomputed with the scalar helpers.
template <Term kind>
inline __m256d terms4(const double* x, __m256d ref) noexcept {
  const __m256d xv = _mm256_loadu_pd(x);
  const __m256d t = _mm256_div_pd(_mm256_sub_pd(xv, ref), ref);
  const __m256d near = _mm256_and_pd(_mm256_cmp_pd(t, _mm256_set1_pd(detail::kNearLo), _CMP_GE_OQ),
                                     _mm256_cmp_pd(t, _mm256_set1_pd(detail::kNearHi), _CMP_LT_OQ));
  const __m256d phi = deficit_near(t);
  const __m256d near_term = kind == Term::ratio ? _mm256_sub_pd(t, phi) : phi;
  if (_mm256_movemask_pd(near) == 0xF) return near_term;

  const __m256d y = _mm256_div_pd(xv, ref);
  const __m256d normal = _mm256_and_pd(_mm256_cmp_pd(y, _mm256_set1_pd(DBL_MIN), _CMP_GE_OQ),
                                       _mm256_cmp_pd(y, _mm256_set1_pd(DBL_MAX), _CMP_LE_OQ));
  if ((_mm256_movemask_pd(_mm256_or_pd(near, normal))) != 0xF) {
    alignas(32) double out[4];
    double r0 = _mm256_cvtsd_f64(ref);
    for (int k = 0; k < 4; ++k) out[k] = kind == Term::ratio ? log_ratio(x[k], r0) : log_deficit(x[k], r0);
    return _mm256_load_pd(out);
  }
  const __m256d lg = log_normal(y);
  const __m256d far_term = kind == Term::ratio ? lg : _mm256_sub_pd(t, lg);
  return _mm256_blendv_pd(far_term, near_term, near);
}

double sum(const double* x, std::size_t n) noexcept {
  LaneSum lanes;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) lanes.add(_mm256_loadu_pd(x + i));
  CompensatedSum acc = lanes.reduce();
  for (; i < n; ++i) acc.add(x[i]);
  return acc.value();
}

double dot(const double* w, const double* x, std::size_t n) noexcept {
  if (w == nullptr) return sum(x, n);
  LaneSum lanes;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) lanes.add_product(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i));
  CompensatedSum acc = lanes.reduce();
  for (; i < n; ++i) acc.add_product(w[i], x[i]);
  return acc.value();
}

template <Term kind>
double term_sum(const double* w, const double* x, std::size_t n, double ref) noexcept {
  const __m256d rv = _mm256_set1_pd(ref);
  LaneSum lanes;
  std::size_t i = 0;
  if (w == nullptr) {
    for (; i + 4 <= n; i += 4) lanes.add(terms4<kind>(x + i, rv));
  } else {
    for (; i + 4 <= n; i += 4) lanes.add_product(_mm256_loadu_pd(w + i), terms4<kind>(x + i, rv));
  }
  CompensatedSum acc = lanes.reduce();
  for (; i < n; ++i) {
    const double term = kind == Term::ratio ? log_ratio(x[i], ref) : log_deficit(x[i], ref);
    if (w == nullptr) {
      acc.add(term);
    } else {
      acc.add_product(w[i], term);
    }
  }
  return acc.value();
}

double log_ratio_sum(const double* w, const double* x, std::size_t n, double ref) noexcept {
  return term_sum<Term::ratio>(w, x, n, ref);
}

double log_deficit_sum(const double* w, const double* x, std::size_t n, double ref) noexcept {
  return term_sum<Term::deficit>(w, x, n, ref);
}

}  // namespace

const KernelTable kAvx2Table{Isa::avx2, sum, dot, log_ratio_sum, log_deficit_sum};

}  // namespace amgm::kernels
