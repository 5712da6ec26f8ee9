#include <gtest/gtest.h>

#include <cmath>

#include "sqg/error.hpp"
#include "sqg/estimates.hpp"
#include "sqg/lebesgue.hpp"
#include "test_util.hpp"

namespace sqg {
namespace {

using testing::Gen;
using testing::kTwoPi;
using testing::sample;

ScalarField constant_field(const Grid2D& g, double c) {
  return ScalarField(g, std::vector<double>(g.size(), c));
}

// Indicator of the left half of the box.
ScalarField left_half(const Grid2D& g) {
  return sample(g, [&](double x1, double) { return x1 < g.center() ? 1.0 : 0.0; });
}

TEST(ClassicalNorm, Examples) {
  const Grid2D g(64, kTwoPi);
  EXPECT_NEAR(classical_lp_norm(constant_field(g, 1.0), 2.0), kTwoPi, 1e-13);
  EXPECT_EQ(classical_lp_norm(ScalarField(g), 3.0), 0.0);
  EXPECT_NEAR(classical_lp_norm(single_mode(g, 1, 0, ModeKind::cosine), 2.0),
              std::numbers::pi * std::sqrt(2.0), 1e-13);
  EXPECT_NEAR(classical_lp_norm(single_mode(g, 1, 0, ModeKind::cosine, 3.0), kInfinity), 3.0, 1e-15);
  EXPECT_THROW(classical_lp_norm(ScalarField(g), 0.5), DomainError);
}

TEST(Modular, Examples) {
  const Grid2D unit(16, 1.0);
  EXPECT_NEAR(modular(constant_field(unit, 2.0), Exponent::constant(unit, 2.0)), 4.0, 1e-14);
  EXPECT_EQ(modular(ScalarField(unit), Exponent::constant(unit, 2.0)), 0.0);
  const Exponent split = make_exponent(unit, ExponentFamily{"split", {{"left", 2.0}, {"right", 3.0}}});
  EXPECT_NEAR(modular(constant_field(unit, 2.0), split), 6.0, 1e-14);
  const Grid2D other(32, 1.0);
  EXPECT_THROW(modular(constant_field(other, 1.0), split), ShapeError);
}

TEST(Luxemburg, Examples) {
  const Grid2D g(64, kTwoPi);
  EXPECT_NEAR(lp_norm(constant_field(g, 1.0), Exponent::constant(g, 2.0)), kTwoPi, 1e-10);
  const Grid2D unit(64, 1.0);
  EXPECT_NEAR(lp_norm(left_half(unit), Exponent::constant(unit, 2.0)), std::sqrt(0.5), 1e-11);
  EXPECT_EQ(lp_norm(ScalarField(g), Exponent::constant(g, 2.0)), 0.0);
}

TEST(Luxemburg, TimeDomain) {
  const TimeGrid unit(1.0, 33);
  const std::vector<double> ones(33, 1.0);
  for (const Exponent& q : {Exponent::constant(unit, 4.0),
                            make_exponent(unit, ExponentFamily{"logdrift", {{"base", 3}, {"amp", 2}}}),
                            make_exponent(unit, ExponentFamily{"wave", {{"base", 3}, {"amp", 1}}})}) {
    EXPECT_NEAR(luxemburg_norm(ones, q).norm_value, 1.0, 1e-11);
  }
  for (double T : {0.05, 0.25, 3.0, 16.0}) {
    const TimeGrid tg(T, 33);
    const Exponent q = make_exponent(tg, ExponentFamily{"wave", {{"base", 4}, {"amp", 1.5}}});
    const double bound = 2.0 * std::max(std::pow(T, 1.0 / q.p_minus()), std::pow(T, 1.0 / q.p_plus()));
    EXPECT_LE(luxemburg_norm(std::vector<double>(33, 1.0), q).norm_value, bound);
  }
}

TEST(Luxemburg, RejectsNonFinite) {
  const TimeGrid tg(1.0, 4);
  std::vector<double> v{1.0, std::nan(""), 2.0, 3.0};
  EXPECT_THROW(luxemburg_norm(v, Exponent::constant(tg, 2.0)), DataError);
}

TEST(Luxemburg, ResultInvariantsProperty) {
  Gen gen(31);
  const Grid2D g(32, kTwoPi);
  for (int trial = 0; trial < 40; ++trial) {
    const ScalarField f = gen.field(g);
    const Exponent p = gen.exponent(g);
    const LuxemburgResult r = luxemburg_norm(f, p);
    EXPECT_NEAR(r.modular_at_norm, 1.0, 1e-8);
    EXPECT_LE(r.bracket_hi - r.bracket_lo, 1e-10 * std::max(1.0, r.norm_value));
    EXPECT_LE(r.bracket_lo, r.norm_value);
    EXPECT_EQ(r.bracket_hi, r.norm_value);
  }
}

TEST(Luxemburg, NormAxiomsProperty) {
  Gen gen(37);
  const Grid2D g(32, kTwoPi);
  for (int trial = 0; trial < 50; ++trial) {
    const ScalarField f = gen.field(g);
    const ScalarField h = gen.field(g);
    const Exponent p = gen.exponent(g);
    const double c = gen.uniform(-20.0, 20.0);
    const double nf = lp_norm(f, p);
    const double nh = lp_norm(h, p);
    EXPECT_NEAR(lp_norm(c * f, p), std::abs(c) * nf, 1e-10 * std::abs(c) * nf);
    EXPECT_LE(lp_norm(f + h, p), nf + nh + 1e-10 * (nf + nh));
    EXPECT_GT(nf, 0.0);
    EXPECT_EQ(lp_norm(f - f, p), 0.0);
  }
}

TEST(Luxemburg, ConstantExponentConsistency) {
  Gen gen(41);
  const Grid2D g(64, kTwoPi);
  for (int trial = 0; trial < 5; ++trial) {
    const ScalarField f = gen.field(g);
    for (double p : {1.5, 2.0, 3.0, 8.0}) {
      const double cls = classical_lp_norm(f, p);
      EXPECT_NEAR(lp_norm(f, Exponent::constant(g, p)), cls, 1e-8 * cls);
    }
  }
}

TEST(Luxemburg, ModularMonotoneInLambda) {
  Gen gen(43);
  const Grid2D g(32, kTwoPi);
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarField f = gen.field(g);
    const Exponent p = gen.exponent(g);
    double prev = kInfinity;
    for (double lambda = 0.01; lambda < 100.0; lambda *= 1.7) {
      const double rho = modular((1.0 / lambda) * f, p);
      EXPECT_LE(rho, prev);
      prev = rho;
    }
  }
}

TEST(Conjugate, Examples) {
  const Grid2D g(16, 1.0);
  EXPECT_DOUBLE_EQ(conjugate_exponent(Exponent::constant(g, 2.0))[0], 2.0);
  EXPECT_NEAR(conjugate_exponent(Exponent::constant(g, 4.0))[0], 4.0 / 3.0, 1e-15);
  const Exponent split = make_exponent(g, ExponentFamily{"split", {{"left", 3.0}, {"right", 1.5}}});
  const Exponent c = conjugate_exponent(split);
  for (int i1 = 0; i1 < 16; ++i1) {
    const double expected = g.coordinate(i1) < g.center() ? 1.5 : 3.0;
    EXPECT_NEAR(c[static_cast<std::size_t>(i1) * 16 + 3], expected, 1e-15);
  }
  EXPECT_THROW(Exponent::constant(g, 1.0), DomainError);
}

TEST(LogHolder, ConstantExponent) {
  const Grid2D g(64, kTwoPi);
  const LogHolderReport r = log_holder_check(Exponent::constant(g, 2.0));
  EXPECT_EQ(r.c_local, 0.0);
  EXPECT_EQ(r.c_infinity, 0.0);
  EXPECT_TRUE(r.log_holder);
}

TEST(LogHolder, LogDecayingExponent) {
  const Grid2D g(64, kTwoPi);
  const Exponent p = make_exponent(g, ExponentFamily{"logdrift", {{"base", 3.0}, {"amp", 1.0}}});
  const LogHolderReport r = log_holder_check(p);
  EXPECT_TRUE(std::isfinite(r.c_local));
  EXPECT_LE(r.c_infinity, 1.1);
  EXPECT_TRUE(r.log_holder);
}

TEST(LogHolder, JumpIsFlagged) {
  const ExponentFamily jump{"split", {{"left", 2.0}, {"right", 3.0}}};
  double prev = 0.0;
  for (int n : {32, 64, 128}) {
    const Grid2D g(n, kTwoPi);
    const LogHolderReport r = log_holder_check(make_exponent(g, jump));
    EXPECT_FALSE(r.log_holder);
    EXPECT_GT(r.c_local, prev);
    prev = r.c_local;
  }
}

TEST(Holder, Examples) {
  const Grid2D unit(16, 1.0);
  const Exponent p4 = Exponent::constant(unit, 4.0);
  EXPECT_NEAR(holder_product_check(constant_field(unit, 1.0), constant_field(unit, 1.0), p4, p4), 1.0,
              1e-10);
  Gen gen(47);
  const Grid2D g(64, kTwoPi);
  const Exponent q4 = Exponent::constant(g, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_LE(holder_product_check(gen.field(g), gen.field(g), q4, q4), 1.0 + 1e-8);
  }
  EXPECT_EQ(holder_product_check(ScalarField(g), gen.field(g), q4, q4), 0.0);
  const Exponent p13 = Exponent::constant(g, 1.3);
  EXPECT_THROW(holder_product_check(gen.field(g), gen.field(g), p13, p13), DomainError);
}

TEST(Holder, VariableExponentConstantStable) {
  const double c64 = holder_constant(Grid2D(64, kTwoPi));
  const double c256 = holder_constant(Grid2D(256, kTwoPi));
  EXPECT_LE(c64, 4.0);
  EXPECT_LE(c256, 4.0);
  EXPECT_NEAR(c256 / c64, 1.0, 0.1);
}

TEST(Duality, Examples) {
  Gen gen(53);
  const Grid2D g(64, kTwoPi);
  const Exponent p2 = Exponent::constant(g, 2.0);
  const ScalarField f = gen.field(g);
  const DualSandwichReport r = dual_sandwich_check(f, p2, {f});
  EXPECT_NEAR(r.ratio, 1.0, 1e-9);
  const DualSandwichReport zero = dual_sandwich_check(ScalarField(g), p2, {f});
  EXPECT_EQ(zero.sup_integral, 0.0);
  EXPECT_TRUE(zero.upper_holds && zero.lower_holds);
  EXPECT_THROW(dual_sandwich_check(f, p2, {}), ConfigError);
}

TEST(Duality, SandwichWithCanonicalWitnessProperty) {
  Gen gen(59);
  const Grid2D g(32, kTwoPi);
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarField f = gen.field(g);
    const Exponent p = gen.exponent(g);
    std::vector<ScalarField> dict{canonical_dual_witness(f, p)};
    for (int k = 0; k < 32; ++k) dict.push_back(gen.field(g));
    const DualSandwichReport r = dual_sandwich_check(f, p, dict);
    EXPECT_GE(r.ratio, 0.5 - 1e-6);
    EXPECT_LE(r.ratio, 2.0 + 1e-6);
    EXPECT_TRUE(r.upper_holds && r.lower_holds);
  }
}

TEST(Duality, UpperBoundWithoutWitness) {
  Gen gen(61);
  const Grid2D g(32, kTwoPi);
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarField f = gen.field(g);
    std::vector<ScalarField> dict;
    for (int k = 0; k < 8; ++k) dict.push_back(gen.field(g));
    EXPECT_TRUE(dual_sandwich_check(f, gen.exponent(g), dict).upper_holds);
  }
}

TEST(Embedding, Examples) {
  const Grid2D unit(32, 1.0);
  const EmbeddingReport r =
      embedding_check(constant_field(unit, 1.0), Exponent::constant(unit, 2.0), Exponent::constant(unit, 4.0));
  EXPECT_TRUE(r.applicable);
  EXPECT_NEAR(r.ratio, 1.0, 1e-10);
  EXPECT_NEAR(r.bound, 2.0, 1e-15);
  EXPECT_TRUE(r.holds);

  Gen gen(67);
  const Grid2D g(32, kTwoPi);
  const Exponent p = gen.exponent(g);
  const ScalarField f = gen.field(g);
  EXPECT_NEAR(embedding_check(f, p, p).ratio, 1.0, 1e-10);
  EXPECT_FALSE(embedding_check(f, Exponent::constant(g, 5.0), Exponent::constant(g, 2.0)).applicable);
}

TEST(Embedding, BoundedDomainProperty) {
  Gen gen(71);
  for (double side : {0.5, 1.0, kTwoPi}) {
    const Grid2D g(32, side);
    for (int trial = 0; trial < 10; ++trial) {
      const Exponent p1 = gen.exponent(g);
      const Exponent p2 = Exponent::constant(g, p1.p_plus() + gen.uniform(0.0, 3.0));
      const EmbeddingReport r = embedding_check(gen.field(g), p1, p2);
      ASSERT_TRUE(r.applicable);
      EXPECT_LE(r.ratio, (1.0 + g.area()) * (1.0 + 1e-8));
    }
  }
}

TEST(Embedding, UnboundedClassMember) {
  const ExponentFamily pbar{"logdrift", {{"base", 3.0}, {"amp", 1.0}}};
  std::vector<double> ratios;
  for (int n : {64, 128, 256}) {
    const Grid2D g(n, kTwoPi);
    const UnboundedEmbeddingReport r =
        embedding_unbounded_check(centered_gaussian(g, 0.4), 3.0, make_exponent(g, pbar));
    EXPECT_TRUE(r.membership.member());
    EXPECT_TRUE(std::isfinite(r.ratio));
    ratios.push_back(r.ratio);
  }
  EXPECT_NEAR(ratios[2] / ratios[0], 1.0, 0.05);
  const Grid2D g(64, kTwoPi);
  EXPECT_FALSE(embedding_class_check(4.0, make_exponent(g, pbar)).lower_bound_ok);
  // A dip at the center makes the embedding exponent shrink outward.
  const ExponentFamily bump{"bump", {{"base", 4.0}, {"amp", -0.5}, {"width", 1.0}}};
  EXPECT_FALSE(embedding_class_check(3.0, make_exponent(g, bump)).grows_outward);
  const ExponentFamily peak{"bump", {{"base", 4.0}, {"amp", 0.5}, {"width", 1.0}}};
  EXPECT_TRUE(embedding_class_check(3.0, make_exponent(g, peak)).grows_outward);
}

}  // namespace
}  // namespace sqg
