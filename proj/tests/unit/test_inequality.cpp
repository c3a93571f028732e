#include "amgm/error.hpp"
#include "amgm/inequality.hpp"
#include "amgm/kernels.hpp"
#include "amgm/suite.hpp"
#include "amgm/vectors.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace amgm;

namespace {

const std::vector<double> kAlpha{2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

// Reference values computed at 30 digits.
TEST(Means, FrozenValues) {
  const WeightVector a(kAlpha);
  const DataVector x({1.0, 4.0, 9.0});
  EXPECT_NEAR(weighted_arithmetic_mean(a, x), 2.8333333333333333, 1e-15);
  EXPECT_LE(rel(weighted_geometric_mean(a, x), 1.8171205928321397), 2e-16);
  EXPECT_LE(rel(amgm_gap(a, x), 1.0162127405011937), 1e-15);
  EXPECT_NEAR(variance_lower_bound(a, x), 7.0 / 12.0, 1e-15);

  const WeightVector u = WeightVector::uniform(3);
  EXPECT_LE(rel(amgm_gap(u, x), 1.3647394177720400), 1e-15);
}

TEST(Means, ZerosAndConstants) {
  const WeightVector a(kAlpha);
  EXPECT_EQ(weighted_geometric_mean(a, DataVector({0.0, 4.0, 9.0})), 0.0);
  EXPECT_NEAR(amgm_gap(a, DataVector({0.0, 4.0, 9.0})), 13.0 / 6.0, 1e-15);
  EXPECT_EQ(amgm_gap(a, DataVector({0.0, 0.0, 0.0})), 0.0);
  EXPECT_EQ(amgm_gap(a, DataVector({3.5, 3.5, 3.5})), 0.0);
  EXPECT_EQ(weighted_geometric_mean(a, DataVector({3.5, 3.5, 3.5})), 3.5);
}

TEST(Means, NoCancellationNearConstantData) {
  // gap ~ sum w (x - m)^2 / (2 m) for small spread; the direct difference
  // AM - GM would lose every digit here.
  const WeightVector u = WeightVector::uniform(2);
  const double h = 1e-7;
  const double g = amgm_gap(u, DataVector({1.0 - h, 1.0 + h}));
  // 1 - sqrt(1 - h^2) = h^2/2 + h^4/8 + ...
  EXPECT_LE(rel(g, 0.5 * h * h), 1e-9);
}

TEST(Means, ExtremeRangeStaysFinite) {
  const WeightVector u = WeightVector::uniform(4);
  const DataVector x({1e-300, 1e300, 1e-300, 1e300});
  EXPECT_LE(rel(weighted_geometric_mean(u, x), 1.0), 1e-13);
  EXPECT_LE(rel(weighted_arithmetic_mean(u, x), 5e299), 1e-15);
}

TEST(Means, BruteForceOracleSmallN) {
  Xoshiro256 rng(SeededStream{123, 0});
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<double> w(n);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 0.05 + rng.uniform();
      x[i] = 0.1 + 10.0 * rng.uniform();
    }
    double total = 0.0;
    for (double v : w) total += v;
    for (double& v : w) v /= total;
    const WeightVector wv(w, WeightOptions{.renormalize = true});
    const DataVector xv(x);
    const long double am = oracle::am(w, x);
    const long double gm = oracle::gm(w, x);
    EXPECT_LE(rel(weighted_arithmetic_mean(wv, xv), static_cast<double>(am)), 1e-15);
    EXPECT_LE(rel(weighted_geometric_mean(wv, xv), static_cast<double>(gm)), 1e-14);
    const long double g = am - gm;
    if (g > 1e-6L * am) EXPECT_LE(rel(amgm_gap(wv, xv), static_cast<double>(g)), 1e-10);
    EXPECT_LE(rel(variance_lower_bound(wv, xv), static_cast<double>(oracle::variance_sqrt(w, x))), 1e-12);
  }
}

TEST(Means, IsaVariantsAgree) {
  if (!kernels::isa_supported(kernels::Isa::avx2)) GTEST_SKIP();
  Xoshiro256 rng(SeededStream{5, 5});
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial;
    const WeightVector w(random_weights(rng, n, WeightRegime::dirichlet), WeightOptions{.renormalize = true});
    const DataVector x(amgm::random_data(rng, n, kDataRegimes[trial % 4]));
    kernels::set_isa(kernels::Isa::scalar);
    const double gs = amgm_gap(w, x);
    const double ms = weighted_geometric_mean(w, x);
    kernels::set_isa(kernels::Isa::avx2);
    const double gv = amgm_gap(w, x);
    const double mv = weighted_geometric_mean(w, x);
    EXPECT_NEAR(gv, gs, 1e-13 * gs + 1e-300);
    EXPECT_NEAR(mv, ms, 1e-14 * ms + 1e-300);
  }
  kernels::reset_isa();
}

TEST(Means, ScaleHomogeneity) {
  Xoshiro256 rng(SeededStream{8, 1});
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 20;
    const WeightVector w(random_weights(rng, n, WeightRegime::dirichlet), WeightOptions{.renormalize = true});
    std::vector<double> x = amgm::random_data(rng, n, DataRegime::plain);
    const double g = amgm_gap(w, DataVector(x));
    for (double& v : x) v *= 1024.0;
    EXPECT_LE(rel(amgm_gap(w, DataVector(x)), 1024.0 * g), 1e-13);
  }
}

TEST(QuotientProfile, SetsAndTies) {
  const WeightVector a(kAlpha);
  const QuotientProfile p = quotient_profile(a, WeightVector::uniform(3));
  EXPECT_DOUBLE_EQ(p.min_quotient, 0.5);
  EXPECT_DOUBLE_EQ(p.max_quotient, 2.0);
  EXPECT_EQ(p.argmin_set, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(p.argmax_set, (std::vector<std::size_t>{0}));
  EXPECT_FALSE(p.uniform());
  EXPECT_TRUE(quotient_profile(a, a).uniform());
}

TEST(GapComparison, FrozenValues) {
  const GapComparison g = gap_comparison(WeightVector(kAlpha), WeightVector::uniform(3), DataVector({1.0, 4.0, 9.0}));
  EXPECT_LE(rel(g.gap_alpha, 1.0162127405011937), 1e-15);
  EXPECT_LE(rel(g.lower, 0.68236970888601999), 1e-15);
  EXPECT_LE(rel(g.upper, 2.7294788355440800), 1e-15);
  EXPECT_LT(g.lower, g.gap_alpha);
  EXPECT_LT(g.gap_alpha, g.upper);
}

TEST(GapComparison, LeftEqualityFixture) {
  const WeightVector a(kAlpha);
  const WeightVector b = WeightVector::uniform(3);
  const DataVector x({1.0, 2.0, 0.5});
  const GapComparison g = gap_comparison(a, b, x);
  EXPECT_NEAR(g.gap_alpha, 1.0 / 12.0, 1e-12);
  EXPECT_NEAR(g.gap_beta, 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(g.lower, g.gap_alpha, 1e-12);
  EXPECT_NEAR(g.upper, 1.0 / 3.0, 1e-12);
  EXPECT_LT(g.gap_alpha, g.upper);

  const EqualityDiagnosis d = equality_diagnosis(a, b, x);
  EXPECT_TRUE(d.left_equal);
  EXPECT_FALSE(d.right_equal);
  ASSERT_TRUE(d.forced_value_left.has_value());
  EXPECT_NEAR(*d.forced_value_left, 1.0, 1e-15);
}

TEST(GapComparison, RightEqualityMirror) {
  // beta = (1/3, 1/3, 1/3) vs alpha with max quotient on {1, 2}: right
  // equality needs x_0 = GM_alpha.
  const WeightVector a({0.2, 0.4, 0.4});
  const WeightVector b = WeightVector::uniform(3);
  const DataVector x({std::sqrt(2.0 * 0.5), 2.0, 0.5});
  const EqualityDiagnosis d = equality_diagnosis(a, b, x);
  EXPECT_TRUE(d.right_equal);
  EXPECT_FALSE(d.left_equal);
  const GapComparison g = gap_comparison(a, b, x);
  EXPECT_NEAR(g.gap_alpha, g.upper, 1e-12);
}

TEST(GapComparison, IdenticalWeightsAreEqualOnBothSides) {
  const WeightVector a(kAlpha);
  const EqualityDiagnosis d = equality_diagnosis(a, a, DataVector({1.0, 7.0, 3.0}));
  EXPECT_TRUE(d.left_equal);
  EXPECT_TRUE(d.right_equal);
}

TEST(GapComparison, ConstantDataIsEqualOnBothSides) {
  const EqualityDiagnosis d =
      equality_diagnosis(WeightVector(kAlpha), WeightVector::uniform(3), DataVector({2.0, 2.0, 2.0}));
  EXPECT_TRUE(d.left_equal);
  EXPECT_TRUE(d.right_equal);
}

TEST(GapComparison, EqualWeightBoundsUseNAlpha) {
  const WeightVector a({0.5, 0.3, 0.2});
  const GapComparison g = equal_weight_bounds(a, DataVector({1.0, 4.0, 9.0}));
  EXPECT_DOUBLE_EQ(g.profile.min_quotient, 3.0 * 0.2);
  EXPECT_DOUBLE_EQ(g.profile.max_quotient, 3.0 * 0.5);
  EXPECT_LE(g.lower, g.gap_alpha);
  EXPECT_LE(g.gap_alpha, g.upper);
}

TEST(GapComparison, SandwichProperty) {
  Xoshiro256 rng(SeededStream{77, 3});
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 2 + trial % 63;
    const WeightVector a(random_weights(rng, n, kWeightRegimes[trial % 4]), WeightOptions{.renormalize = true});
    const WeightVector b(random_weights(rng, n, kWeightRegimes[(trial / 4) % 4]), WeightOptions{.renormalize = true});
    const DataVector x(amgm::random_data(rng, n, kDataRegimes[(trial / 16) % 4]));
    const GapComparison g = gap_comparison(a, b, x);
    const double scale = std::max(g.gap_alpha, g.upper);
    EXPECT_LE(g.lower - g.gap_alpha, 1e-10 * scale);
    EXPECT_LE(g.gap_alpha - g.upper, 1e-10 * scale);
  }
}

TEST(GapComparison, Errors) {
  EXPECT_THROW(gap_comparison(WeightVector(kAlpha), WeightVector::uniform(4), DataVector({1.0, 2.0, 3.0})),
               DimensionError);
  EXPECT_THROW(equality_diagnosis(WeightVector(kAlpha), WeightVector::uniform(3), DataVector({1.0, 2.0, 3.0}), 0.0),
               DomainError);
}

TEST(RatioBounds, FrozenValues) {
  const RatioBounds r = ratio_bounds(WeightVector({0.5, 0.25, 0.25}), DataVector({1.0, 4.0, 9.0}));
  EXPECT_LE(rel(r.gm_am_ratio, 0.70755583904884858), 1e-15);
  EXPECT_DOUBLE_EQ(r.exponent_max, 1.5);
  EXPECT_DOUBLE_EQ(r.exponent_min, 0.75);
  EXPECT_LE(rel(r.lower, std::pow(0.70755583904884858, 1.5)), 1e-14);
  EXPECT_LE(rel(r.upper, std::pow(0.70755583904884858, 0.75)), 1e-14);
  EXPECT_LE(r.lower, r.ratio);
  EXPECT_LE(r.ratio, r.upper);
}

TEST(RatioBounds, ReferenceDecimals) {
  const RatioBounds r = ratio_bounds(WeightVector(kAlpha), DataVector({1.0, 4.0, 9.0}));
  EXPECT_LE(rel(r.lower, 0.50063526537212011), 1e-14);
  EXPECT_LE(rel(r.ratio, 0.64133667982310811), 1e-14);
  EXPECT_LE(rel(r.upper, 0.84116338427730470), 1e-14);
}

TEST(RatioBounds, ZerosAndErrors) {
  const RatioBounds r = ratio_bounds(WeightVector(kAlpha), DataVector({0.0, 4.0, 9.0}));
  EXPECT_EQ(r.ratio, 0.0);
  EXPECT_EQ(r.lower, 0.0);
  EXPECT_EQ(r.upper, 0.0);
  EXPECT_THROW(ratio_bounds(WeightVector(kAlpha), DataVector({0.0, 0.0, 0.0})), DegenerateInputError);
}

TEST(VarianceBound, HoldsOnRandomInstances) {
  Xoshiro256 rng(SeededStream{31, 0});
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 2 + trial % 63;
    const WeightVector w(random_weights(rng, n, kWeightRegimes[trial % 4]), WeightOptions{.renormalize = true});
    const DataVector x(amgm::random_data(rng, n, kDataRegimes[(trial / 4) % 4]));
    const double g = amgm_gap(w, x);
    EXPECT_LE(variance_lower_bound(w, x) - g, 1e-10 * std::max(g, 1e-300));
  }
}

TEST(PowerLogDomain, Basics) {
  EXPECT_EQ(power_log_domain(0.0, 2.5), 0.0);
  EXPECT_NEAR(power_log_domain(2.0, 10.0), 1024.0, 1e-12);
  EXPECT_TRUE(relatively_equal(1.0, 1.0 + 1e-13, 1e-12));
  EXPECT_FALSE(relatively_equal(1.0, 1.0 + 1e-11, 1e-12));
}
