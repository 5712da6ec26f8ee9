#include <gtest/gtest.h>

#include <cmath>

#include "sqg/error.hpp"
#include "sqg/mild.hpp"
#include "sqg/regularity.hpp"
#include "sqg/scaling.hpp"
#include "sqg/semigroup.hpp"
#include "test_util.hpp"

namespace sqg {
namespace {

using testing::Gen;
using testing::kTwoPi;
using testing::rel_max_error;
using testing::sample;

ScalarField mixed_data(const Grid2D& g, double eps) {
  return eps * (single_mode(g, 1, 0, ModeKind::sine) + single_mode(g, 0, 2, ModeKind::cosine) +
                single_mode(g, 1, 1, ModeKind::sine));
}

TEST(MultiIndex, Validation) {
  EXPECT_THROW(MultiIndex(-1, 0), ConfigError);
  EXPECT_THROW(MultiIndex(2, 2), ConfigError);
  EXPECT_NO_THROW(MultiIndex(2, 2, 4));
  EXPECT_EQ(MultiIndex(2, 1).to_string(), "(2,1)");
  const std::vector<MultiIndex> expected{MultiIndex(0, 0), MultiIndex(1, 0), MultiIndex(0, 1),
                                         MultiIndex(2, 0), MultiIndex(1, 1), MultiIndex(0, 2)};
  EXPECT_EQ(indices_up_to(MultiIndex(1, 1)), expected);
  EXPECT_EQ(indices_up_to(MultiIndex(0, 3)).size(), 10u);
}

TEST(SpectralDerivative, Examples) {
  const Grid2D g(32, kTwoPi);
  const ScalarField s = sample(g, [](double x1, double x2) { return std::sin(x1 + x2); });
  const ScalarField c = sample(g, [](double x1, double x2) { return std::cos(x1 + x2); });
  EXPECT_LE(max_abs_difference(spectral_derivative(s, MultiIndex(0, 0)), s), 1e-14);
  EXPECT_LE(max_abs_difference(spectral_derivative(s, MultiIndex(1, 0)), c), 1e-13);
  EXPECT_LE(max_abs_difference(spectral_derivative(s, MultiIndex(2, 1)), -1.0 * c), 1e-11);
  const ScalarField m = single_mode(g, 2, 3, ModeKind::cosine);
  // d1^2 d2 cos(2x1 + 3x2) = 12 sin(2x1 + 3x2)
  EXPECT_LE(rel_max_error(spectral_derivative(m, MultiIndex(2, 1)), 12.0 * single_mode(g, 2, 3, ModeKind::sine)),
            1e-12);
}

TEST(SpectralDerivative, CommutesWithSemigroupProperty) {
  Gen gen(103);
  const Grid2D g(32, kTwoPi);
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarField f = gen.field(g);
    const MultiIndex gamma(gen.integer(0, 2), gen.integer(0, 1));
    const double t = gen.uniform(0.0, 1.0);
    const double alpha = gen.uniform(1.05, 2.0);
    EXPECT_LE(rel_max_error(spectral_derivative(apply_semigroup(f, t, alpha), gamma),
                            apply_semigroup(spectral_derivative(f, gamma), t, alpha)),
              1e-12);
  }
}

TEST(SpectralDerivative, LeibnizRuleProperty) {
  Gen gen(107);
  const Grid2D g(64, kTwoPi);
  for (int trial = 0; trial < 10; ++trial) {
    // Bands of 6 keep the pointwise product free of aliasing.
    const ScalarField a = gen.field(g, 6);
    const ScalarField b = gen.field(g, 6);
    ScalarField ab(g);
    for (std::size_t k = 0; k < g.size(); ++k) ab.values()[k] = a.values()[k] * b.values()[k];
    for (int axis : {0, 1}) {
      const MultiIndex d(axis == 0 ? 1 : 0, axis == 1 ? 1 : 0);
      const ScalarField da = spectral_derivative(a, d);
      const ScalarField db = spectral_derivative(b, d);
      ScalarField rhs(g);
      for (std::size_t k = 0; k < g.size(); ++k) {
        rhs.values()[k] = da.values()[k] * b.values()[k] + a.values()[k] * db.values()[k];
      }
      EXPECT_LE(rel_max_error(spectral_derivative(ab, d), rhs), 1e-10);
    }
  }
}

TEST(Regularity, ZeroSolution) {
  const Grid2D g(32, kTwoPi);
  const SolverConfig cfg(g, SolverParams{});
  const Trajectory f(g, cfg.time());
  const PicardResult r = picard_solve(ScalarField(g), f, cfg);
  const RegularityReport rep = regularity_report(r, ScalarField(g), MultiIndex(1, 1), f, cfg);
  EXPECT_EQ(rep.rows.size(), 6u);
  for (const DerivativeRow& row : rep.rows) {
    EXPECT_EQ(row.direct_norm, 0.0);
    EXPECT_EQ(row.distance, 0.0);
    EXPECT_TRUE(row.bounded);
  }
}

TEST(Regularity, LinearRegimeMatchesLinearPart) {
  // For tiny data the nonlinear correction is quadratic, so every derivative
  // norm sits on its linear-part norm.
  const Grid2D g(32, kTwoPi);
  const SolverConfig cfg(g, SolverParams{});
  const ScalarField theta0 = mixed_data(g, 1e-4);
  const Trajectory f(g, cfg.time());
  const PicardResult r = picard_solve(theta0, f, cfg);
  ASSERT_TRUE(r.converged);
  const RegularityReport rep = regularity_report(r, theta0, MultiIndex(2, 1), f, cfg);
  ASSERT_EQ(rep.rows.size(), 10u);
  for (const DerivativeRow& row : rep.rows) {
    const double oracle =
        xt_norm(spectral_derivative(linear_part(theta0, f, cfg), row.gamma), cfg);
    EXPECT_NEAR(row.direct_norm, oracle, 0.05 * oracle) << row.gamma.to_string();
    EXPECT_TRUE(row.converged);
    EXPECT_TRUE(row.bounded);
    EXPECT_LE(row.distance, 1e-8 * std::max(1.0, row.direct_norm));
  }
}

TEST(Regularity, NonlinearFixedPointAgrees) {
  const Grid2D g(32, kTwoPi);
  const SolverConfig cfg(g, SolverParams{});
  const ScalarField theta0 = mixed_data(g, 0.1);
  const Trajectory f(g, cfg.time());
  const PicardResult r = picard_solve(theta0, f, cfg);
  ASSERT_TRUE(r.converged);
  const RegularityReport rep = regularity_report(r, theta0, MultiIndex(1, 1), f, cfg);
  EXPECT_TRUE(rep.all_finite());
  EXPECT_TRUE(rep.all_bounded());
  EXPECT_LE(rep.max_distance(), 1e-8);
}

TEST(Regularity, RequiresConvergedSolution) {
  const Grid2D g(32, kTwoPi);
  SolverParams p;
  p.picard_max_iter = 2;
  const SolverConfig cfg(g, p);
  const ScalarField theta0 = mixed_data(g, 0.1);
  const Trajectory f(g, cfg.time());
  const PicardResult r = picard_solve(theta0, f, cfg);
  ASSERT_FALSE(r.converged);
  EXPECT_THROW(regularity_report(r, theta0, MultiIndex(1, 0), f, cfg), PreconditionError);
}

TEST(Scaling, IdentityForUnitLambda) {
  const Grid2D g(64, kTwoPi);
  const ScalarField f = centered_gaussian(g, 0.5);
  EXPECT_EQ(max_abs_difference(rescale_data(f, 1, 1.5), f), 0.0);
  const ScalingReport r = scaling_check(f, 1, 1.5);
  EXPECT_EQ(r.critical_ratio, 1.0);
  EXPECT_EQ(r.contrast_ratio, 1.0);
}

TEST(Scaling, GaussianRatios) {
  for (double alpha : {1.25, 1.5, 2.0}) {
    const Grid2D g(256, kTwoPi);
    const ScalarField f = centered_gaussian(g, 0.4);
    for (int lambda : {2, 3, 4}) {
      const ScalingReport r = scaling_check(f, lambda, alpha);
      EXPECT_NEAR(r.critical_exponent, 2.0 / (alpha - 1.0), 1e-15);
      EXPECT_NEAR(r.critical_ratio, 1.0, 1e-6) << alpha << " " << lambda;
      EXPECT_NEAR(r.contrast_ratio, std::pow(lambda, alpha - 2.0), 1e-6 * r.contrast_expected);
      EXPECT_NEAR(r.contrast_expected, std::pow(lambda, alpha - 2.0), 1e-15);
    }
  }
}

TEST(Scaling, ErrorShrinksWithResolution) {
  std::vector<double> errors;
  for (int n : {128, 256}) {
    const Grid2D g(n, kTwoPi);
    errors.push_back(std::abs(scaling_check(centered_gaussian(g, 0.15), 2, 1.5).critical_ratio - 1.0));
  }
  EXPECT_LE(errors[1], std::max(0.5 * errors[0], 1e-12));
}

TEST(Scaling, Errors) {
  const Grid2D g(32, kTwoPi);
  const ScalarField f = centered_gaussian(g, 0.5);
  EXPECT_THROW(scaling_check(f, 2, 1.0), DomainError);
  EXPECT_THROW(scaling_check(f, 2, 1.02), DomainError);  // critical exponent 100
  EXPECT_THROW(scaling_check(f, 0, 1.5), DomainError);
  EXPECT_THROW(scaling_check(ScalarField(g), 2, 1.5), DomainError);
}

}  // namespace
}  // namespace sqg
