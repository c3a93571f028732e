#include "amgm/error.hpp"
#include "amgm/rng.hpp"
#include "amgm/sampling.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

using namespace amgm;

TEST(Rng, SplitMixKnownValue) {
  SplitMix64 sm(0);
  EXPECT_EQ(sm.next(), 0xE220A8397B1DCDAFULL);
  std::uint64_t state = 0;
  oracle::splitmix_next(state);
  EXPECT_EQ(sm.next(), oracle::splitmix_next(state));
}

TEST(Rng, XoshiroMatchesReference) {
  const SeededStream s{42, 7};
  std::uint64_t seed = stream_key(s);
  EXPECT_EQ(seed, mix64(42ULL ^ mix64(7ULL + 0x9E3779B97F4A7C15ULL)));
  oracle::Xoshiro ref{};
  for (auto& word : ref.s) word = oracle::splitmix_next(seed);
  Xoshiro256 rng(s);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(rng.next(), ref.next());
}

TEST(Rng, XoshiroReferenceKnownState) {
  oracle::Xoshiro ref{{1, 2, 3, 4}};
  EXPECT_EQ(ref.next(), 11520u);
  EXPECT_EQ(ref.next(), 0u);
}

TEST(Rng, UniformRangeAndStdCompatibility) {
  Xoshiro256 rng(SeededStream{1, 1});
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  std::uniform_int_distribution<int> dist(0, 9);
  EXPECT_LE(dist(rng), 9);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  Xoshiro256 a(SeededStream{9, 3});
  Xoshiro256 b(SeededStream{9, 3});
  Xoshiro256 c(SeededStream{9, 4});
  Xoshiro256 d(SeededStream{10, 3});
  bool differs_c = false;
  bool differs_d = false;
  for (int i = 0; i < 16; ++i) {
    const auto va = a.next();
    ASSERT_EQ(va, b.next());
    differs_c |= va != c.next();
    differs_d |= va != d.next();
  }
  EXPECT_TRUE(differs_c);
  EXPECT_TRUE(differs_d);
}

TEST(Rng, AdjacentStreamsUncorrelated) {
  const std::size_t pairs = 100000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t k = 0; k < pairs; ++k) {
    Xoshiro256 a(SeededStream{2026, 2 * k});
    Xoshiro256 b(SeededStream{2026, 2 * k + 1});
    const double x = a.uniform();
    const double y = b.uniform();
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
  }
  const double n = static_cast<double>(pairs);
  const double cov = sxy / n - (sx / n) * (sy / n);
  const double corr = cov / std::sqrt((sxx / n - sx * sx / n / n) * (syy / n - sy * sy / n / n));
  EXPECT_LT(std::abs(corr), 0.01);
}

TEST(Sampling, ExponentialMoments) {
  const DataVector x = sample_exponential(200000, 2.0, SeededStream{5, 0});
  const double mean = std::accumulate(x.values().begin(), x.values().end(), 0.0) / 200000.0;
  EXPECT_NEAR(mean, 0.5, 0.005);
}

TEST(Sampling, LambdaScalesExactly) {
  const DataVector a = sample_exponential(64, 0.5, SeededStream{6, 1});
  const DataVector b = sample_exponential(64, 2.0, SeededStream{6, 1});
  const DataVector c = sample_exponential(64, 1.0, SeededStream{6, 1});
  for (std::size_t i = 0; i < 64; ++i) {
    EXPECT_EQ(b[i], c[i] / 2.0);
    EXPECT_EQ(a[i], 4.0 * b[i]);
  }
  EXPECT_EQ(gm_am_ratio(a), gm_am_ratio(b));
}

TEST(Sampling, RatioIsScaleInvariant) {
  const DataVector x = sample_exponential(100, 1.0, SeededStream{7, 1});
  const double r = gm_am_ratio(x);
  for (double t : {1e-6, 1e6, 3.7}) {
    std::vector<double> y(x.values().begin(), x.values().end());
    for (double& v : y) v *= t;
    EXPECT_NEAR(gm_am_ratio(y), r, 1e-12 * r);
  }
}

TEST(Sampling, RatioFixturesAndErrors) {
  EXPECT_NEAR(gm_am_ratio(std::vector<double>{1.0, 4.0, 9.0}), 0.70755583904884858, 1e-15);
  EXPECT_EQ(gm_am_ratio(std::vector<double>{0.0, 4.0}), 0.0);
  EXPECT_EQ(gm_am_ratio(std::vector<double>{3.0, 3.0}), 1.0);
  EXPECT_THROW(gm_am_ratio(std::vector<double>{0.0, 0.0}), DegenerateInputError);
  EXPECT_THROW(gm_am_ratio(std::vector<double>{1.0}), DimensionError);
}

TEST(Sampling, SimplexSamplers) {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const DataVector x = sample_l1_sphere_positive(17, SeededStream{8, k});
    EXPECT_NEAR(std::accumulate(x.values().begin(), x.values().end(), 0.0), 1.0, 1e-15);
    const std::vector<double> y = sample_simplex_spacings(17, SeededStream{8, k});
    EXPECT_NEAR(std::accumulate(y.begin(), y.end(), 0.0), 1.0, 1e-15);
    for (double v : y) EXPECT_GE(v, 0.0);
  }
}

TEST(Sampling, SimplexCoordinateMean) {
  // Each coordinate of a uniform simplex point has mean 1/n.
  const std::size_t n = 5;
  const std::size_t draws = 20000;
  double s0 = 0.0;
  double s1 = 0.0;
  for (std::size_t k = 0; k < draws; ++k) {
    s0 += sample_simplex_spacings(n, SeededStream{9, k})[0];
    s1 += sample_l1_sphere_positive(n, SeededStream{9, k})[n - 1];
  }
  EXPECT_NEAR(s0 / draws, 0.2, 0.005);
  EXPECT_NEAR(s1 / draws, 0.2, 0.005);
}

TEST(Geometry, ClosedForms) {
  const GeometryConstants g2 = GeometryConstants::for_dimension(2);
  EXPECT_DOUBLE_EQ(g2.ball_volume, 2.0);
  EXPECT_DOUBLE_EQ(g2.sphere_area, 4.0 * std::sqrt(2.0));
  const GeometryConstants g3 = GeometryConstants::for_dimension(3);
  EXPECT_DOUBLE_EQ(g3.ball_volume, 8.0 / 6.0);
  for (int n = 2; n <= 20; ++n) {
    const GeometryConstants g = GeometryConstants::for_dimension(n);
    const double rhs = n * std::sqrt(static_cast<double>(n)) * g.ball_volume;
    EXPECT_NEAR(g.sphere_area, rhs, 1e-12 * rhs) << n;
  }
  const GeometryConstants g30 = GeometryConstants::for_dimension(30);
  EXPECT_NEAR(g30.sphere_area, 30.0 * std::sqrt(30.0) * g30.ball_volume, 1e-10 * g30.sphere_area);
  EXPECT_THROW(GeometryConstants::for_dimension(1), DimensionError);
}

TEST(Geometry, BallVolumeMonteCarlo) {
  for (int n = 2; n <= 6; ++n) {
    const BallVolumeEstimate e = ball_volume_mc_check(n, 100000, SeededStream{10, static_cast<std::uint64_t>(n)});
    EXPECT_LE(std::abs(e.hit_fraction - e.expected), 3.0 * e.standard_error) << n;
  }
  EXPECT_THROW(ball_volume_mc_check(9, 100000, SeededStream{}), DomainError);
  EXPECT_THROW(ball_volume_mc_check(3, 10, SeededStream{}), DomainError);
}

TEST(SamplerEquivalence, Agrees) {
  const SamplerEquivalence s = sampler_equivalence_check(20, 20000, 0.6, SeededStream{11, 0});
  EXPECT_EQ(s.trials, 20000u);
  EXPECT_LE(std::abs(s.p_exponential - s.p_sphere), 4.0 * s.standard_error);
  const SamplerEquivalence t =
      sampler_equivalence_check(20, 20000, 0.6, SeededStream{11, 0}, SphereSampler::normalized_exponential);
  EXPECT_LE(std::abs(t.p_exponential - t.p_sphere), 4.0 * t.standard_error);
  EXPECT_THROW(sampler_equivalence_check(20, 999, 0.5, SeededStream{}), DomainError);
  EXPECT_THROW(sampler_equivalence_check(20, 1000, 1.5, SeededStream{}), DomainError);
}
