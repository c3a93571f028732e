#include "amgm/error.hpp"
#include "amgm/inequality.hpp"
#include "amgm/jensen.hpp"
#include "amgm/suite.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace amgm;

namespace {

const std::vector<double> kAlpha{2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};

long double ld_eval(const std::string& name, long double t) {
  if (name == "exp") return std::exp(t);
  if (name == "square") return t * t;
  if (name == "quartic") return t * t * t * t;
  if (name == "neg-log") return -std::log(t);
  if (name == "xlogx") return t == 0.0L ? 0.0L : t * std::log(t);
  return t;
}

}  // namespace

TEST(Interval, Contains) {
  const Interval open{0.0, 1.0, true, true};
  EXPECT_FALSE(open.contains(0.0));
  EXPECT_TRUE(open.contains(0.5));
  const Interval closed{0.0, 1.0, false, false};
  EXPECT_TRUE(closed.contains(0.0));
  EXPECT_TRUE(closed.contains(1.0));
  EXPECT_FALSE(closed.contains(std::nan("")));
}

TEST(Catalog, DivergenceMatchesLongDoubleDifference) {
  Xoshiro256 rng(SeededStream{4, 4});
  for (const std::string& name : convex_catalog()) {
    const ConvexFunction f = make_convex_function(name);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 2 + trial % 6;
      const std::vector<double> wv = random_weights(rng, n, WeightRegime::dirichlet);
      const WeightVector w(wv, WeightOptions{.renormalize = true});
      std::vector<double> x(n);
      for (double& v : x) v = (name == "neg-log" || name == "xlogx") ? 0.1 + 3.0 * rng.uniform() : 4.0 * rng.uniform() - 2.0;
      const long double expect = oracle::jensen(wv, x, [&](long double t) { return ld_eval(name, t); });
      const double got = jensen_gap(w, x, f);
      if (expect > 1e-8L) {
        EXPECT_NEAR(got, static_cast<double>(expect), 1e-9 * static_cast<double>(expect)) << name;
      } else {
        EXPECT_NEAR(got, static_cast<double>(expect), 1e-15) << name;
      }
      EXPECT_GE(got, 0.0);
    }
  }
}

TEST(Catalog, UnknownNameThrows) { EXPECT_THROW(make_convex_function("sin"), DomainError); }

TEST(JensenGap, DomainViolation) {
  const std::vector<double> x{1.0, -1.0, 2.0};
  EXPECT_THROW(jensen_gap(WeightVector(kAlpha), x, make_convex_function("neg-log")), DomainError);
  const std::vector<double> zero{0.0, 1.0, 2.0};
  EXPECT_NO_THROW(jensen_gap(WeightVector(kAlpha), zero, make_convex_function("xlogx")));
}

TEST(JensenGap, AffineIsZeroAndNotStrict) {
  const ConvexFunction f = make_convex_function("affine");
  EXPECT_FALSE(f.strict());
  const std::vector<double> x{1.0, -4.0, 9.0};
  EXPECT_EQ(jensen_gap(WeightVector(kAlpha), x, f), 0.0);
}

TEST(JensenGap, UserFunctionWithoutDivergence) {
  const ConvexFunction f("cosh", [](double t) { return std::cosh(t); }, Interval{}, true);
  const std::vector<double> x{0.0, 1.0, -1.0};
  // The alpha-mean of x is 0.
  EXPECT_NEAR(jensen_gap(WeightVector(kAlpha), x, f), (std::cosh(1.0) - 1.0) / 3.0, 1e-15);
}

TEST(JensenComparison, LeftEqualityFixture) {
  const WeightVector a(kAlpha);
  const WeightVector b = WeightVector::uniform(3);
  const std::vector<double> x{1.0, 0.5, 1.5};
  const EqualityDiagnosis d = jensen_equality_diagnosis(a, b, x);
  EXPECT_TRUE(d.left_equal);
  EXPECT_FALSE(d.right_equal);
  for (const std::string& name : {"exp", "square", "quartic", "neg-log", "xlogx"}) {
    const JensenGapComparison j = jensen_gap_comparison(a, b, x, make_convex_function(name));
    EXPECT_NEAR(j.gap_alpha, j.lower, 1e-14) << name;
    EXPECT_LT(j.gap_alpha, j.upper) << name;
  }
}

TEST(JensenComparison, ReproducesAmGmOnLoggedData) {
  Xoshiro256 rng(SeededStream{55, 0});
  const ConvexFunction f = make_convex_function("exp");
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + trial % 40;
    const WeightVector a(random_weights(rng, n, kWeightRegimes[trial % 4]), WeightOptions{.renormalize = true});
    const WeightVector b(random_weights(rng, n, kWeightRegimes[(trial / 4) % 4]), WeightOptions{.renormalize = true});
    std::vector<double> x = amgm::random_data(rng, n, trial % 2 == 0 ? DataRegime::plain : DataRegime::wide_range);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = std::log(x[i]);
    const GapComparison g = gap_comparison(a, b, DataVector(x));
    const JensenGapComparison j = jensen_gap_comparison(a, b, y, f);
    EXPECT_NEAR(j.gap_alpha, g.gap_alpha, 1e-10 * g.gap_alpha);
    EXPECT_NEAR(j.lower, g.lower, 1e-10 * g.lower);
    EXPECT_NEAR(j.upper, g.upper, 1e-10 * g.upper);
  }
}

TEST(JensenComparison, ConvexityProbeRejectsConcave) {
  const ConvexFunction concave("neg-square", [](double t) { return -t * t; }, Interval{}, true);
  const std::vector<double> x{0.0, 1.0, 3.0};
  EXPECT_THROW(jensen_gap_comparison(WeightVector(kAlpha), WeightVector::uniform(3), x, concave,
                                     JensenOptions{.probe_convexity = true}),
               DomainError);
  const ConvexityProbe p = probe_convexity(make_convex_function("quartic"), -3.0, 3.0);
  EXPECT_EQ(p.violations, 0u);
  EXPECT_GT(p.probes, 0u);
}

TEST(JensenEquality, ShiftInvariant) {
  const WeightVector a(kAlpha);
  const WeightVector b = WeightVector::uniform(3);
  const std::vector<double> x{1001.0, 1000.5, 1001.5};
  EXPECT_TRUE(jensen_equality_diagnosis(a, b, x).left_equal);
}
