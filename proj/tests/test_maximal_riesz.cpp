#include <gtest/gtest.h>

#include <cmath>

#include "sqg/error.hpp"
#include "sqg/estimates.hpp"
#include "sqg/maximal.hpp"
#include "sqg/riesz_potential.hpp"
#include "test_util.hpp"

namespace sqg {
namespace {

using testing::Gen;
using testing::kTwoPi;
using testing::rel_max_error;
using testing::sample;

// Brute-force oracle: every square average computed by direct summation with
// periodic wrap.
ScalarField brute_maximal(const ScalarField& f) {
  const int n = f.grid().n_points();
  std::vector<int> widths{0};
  for (int m = 1; m <= n / 4; m *= 2) widths.push_back(m);
  ScalarField out(f.grid());
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      double best = 0.0;
      for (int m : widths) {
        double sum = 0.0;
        for (int a = -m; a <= m; ++a) {
          for (int b = -m; b <= m; ++b) {
            const int j1 = ((i1 + a) % n + n) % n;
            const int j2 = ((i2 + b) % n + n) % n;
            sum += std::abs(f.values()[static_cast<std::size_t>(j1) * n + j2]);
          }
        }
        best = std::max(best, sum / ((2.0 * m + 1) * (2.0 * m + 1)));
      }
      out.values()[static_cast<std::size_t>(i1) * n + i2] = best;
    }
  }
  return out;
}

TEST(Maximal, Constant) {
  const Grid2D g(32, kTwoPi);
  const ScalarField c(g, std::vector<double>(g.size(), -2.5));
  for (double v : maximal_function(c).values()) EXPECT_NEAR(v, 2.5, 1e-14);
}

TEST(Maximal, MatchesBruteForce) {
  const Grid2D g(32, kTwoPi);
  ScalarField spike(g);
  spike.values()[5 * 32 + 30] = 1.0;
  EXPECT_LE(rel_max_error(maximal_function(spike), brute_maximal(spike)), 1e-12);
  Gen gen(73);
  for (int trial = 0; trial < 3; ++trial) {
    const ScalarField f = gen.field(g);
    EXPECT_LE(rel_max_error(maximal_function(f), brute_maximal(f)), 1e-12);
  }
}

TEST(Maximal, HalfWidths) {
  EXPECT_EQ(maximal_half_widths(Grid2D(32, 1.0)), (std::vector<int>{0, 1, 2, 4, 8}));
}

TEST(Maximal, DominanceAndSublinearityProperty) {
  Gen gen(79);
  const Grid2D g(32, kTwoPi);
  for (int trial = 0; trial < 20; ++trial) {
    const ScalarField f = gen.field(g);
    const ScalarField h = gen.field(g);
    const double c = gen.uniform(-5.0, 5.0);
    const ScalarField mf = maximal_function(f);
    const ScalarField mh = maximal_function(h);
    const ScalarField msum = maximal_function(f + h);
    const ScalarField mc = maximal_function(c * f);
    for (std::size_t k = 0; k < g.size(); ++k) {
      EXPECT_GE(mf.values()[k], std::abs(f.values()[k]) - 1e-14);
      EXPECT_LE(msum.values()[k], mf.values()[k] + mh.values()[k] + 1e-12);
      EXPECT_NEAR(mc.values()[k], std::abs(c) * mf.values()[k], 1e-12 * (1.0 + mc.values()[k]));
    }
  }
}

TEST(Maximal, ConstantGrowsSlowly) {
  const double c64 = maximal_constant(Grid2D(64, kTwoPi));
  const double c256 = maximal_constant(Grid2D(256, kTwoPi));
  EXPECT_GE(c64, 1.0);
  EXPECT_LE(c256, 2.0 * c64);
}

TEST(RieszPotential2D, SingleModes) {
  const Grid2D g(64, kTwoPi);
  const ScalarField c1 = single_mode(g, 1, 0, ModeKind::cosine);
  EXPECT_LE(rel_max_error(riesz_potential_2d(c1, 1.0), c1), 1e-13);
  const ScalarField c2 = single_mode(g, 2, 0, ModeKind::cosine);
  EXPECT_LE(rel_max_error(riesz_potential_2d(c2, 0.5), std::pow(2.0, -0.5) * c2), 1e-13);
  const ScalarField m = single_mode(g, 3, 4, ModeKind::sine);
  EXPECT_LE(rel_max_error(riesz_potential_2d(m, 1.0), 0.2 * m), 1e-13);
}

TEST(RieszPotential2D, CompositionProperty) {
  Gen gen(83);
  const Grid2D g(32, kTwoPi);
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarField f = gen.field(g);
    const double a = gen.uniform(0.1, 0.9);
    const double b = gen.uniform(0.1, 0.9);
    EXPECT_LE(rel_max_error(riesz_potential_2d(riesz_potential_2d(f, a), b), riesz_potential_2d(f, a + b)),
              1e-11);
  }
}

TEST(RieszPotential2D, Errors) {
  const Grid2D g(16, kTwoPi);
  const ScalarField f = single_mode(g, 1, 0, ModeKind::cosine);
  EXPECT_THROW(riesz_potential_2d(f, 0.0), DomainError);
  EXPECT_THROW(riesz_potential_2d(f, 2.0), DomainError);
  const ScalarField c(g, std::vector<double>(g.size(), 1.0));
  EXPECT_THROW(riesz_potential_2d(c, 0.5), DomainError);
}

TEST(RieszPotential1D, ZeroAndEndpoint) {
  const TimeGrid tg(1.0, 257);
  const std::vector<double> zero(257, 0.0);
  for (double v : riesz_potential_1d(zero, tg, 0.5)) EXPECT_EQ(v, 0.0);
  const std::vector<double> ones(257, 1.0);
  const std::vector<double> r = riesz_potential_1d(ones, tg, 0.5);
  EXPECT_NEAR(r.front(), 2.0, 1e-12);
  EXPECT_NEAR(r.back(), 2.0, 1e-12);
}

TEST(RieszPotential1D, InteriorOracle) {
  const TimeGrid tg(1.0, 257);
  const std::vector<double> r = riesz_potential_1d(std::vector<double>(257, 1.0), tg, 0.5);
  for (std::size_t i = 1; i + 1 < 257; i += 16) {
    const double s = tg.node(i);
    EXPECT_NEAR(r[i], 2.0 * (std::sqrt(s) + std::sqrt(1.0 - s)), 1e-12);
  }
}

TEST(RieszPotential1D, HomogeneityProperty) {
  Gen gen(89);
  const TimeGrid tg(0.5, 33);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> psi(33);
    for (double& v : psi) v = gen.uniform(-1.0, 1.0);
    const double c = gen.uniform(0.0, 10.0);
    const double beta = gen.uniform(0.05, 0.95);
    std::vector<double> scaled = psi;
    for (double& v : scaled) v *= c;
    const std::vector<double> a = riesz_potential_1d(psi, tg, beta);
    const std::vector<double> b = riesz_potential_1d(scaled, tg, beta);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(b[i], c * a[i], 1e-12 * (1.0 + b[i]));
  }
}

TEST(RieszPotential1D, Errors) {
  const TimeGrid tg(1.0, 9);
  const std::vector<double> psi(9, 1.0);
  EXPECT_THROW(riesz_potential_1d(psi, tg, 0.0), DomainError);
  EXPECT_THROW(riesz_potential_1d(psi, tg, 1.0), DomainError);
  EXPECT_THROW(riesz_potential_1d(std::vector<double>(5, 1.0), tg, 0.5), ShapeError);
}

}  // namespace
}  // namespace sqg
