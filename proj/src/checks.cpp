#include "sqg/checks.hpp"

#include <cmath>
#include <random>

#include "sqg/generators.hpp"
#include "sqg/lebesgue.hpp"

namespace sqg {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  // Portable across standard libraries, unlike uniform_real_distribution.
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<ScalarField> constant_test_family(const Grid2D& g) {
  const double L = g.box_side();
  return {
      random_bandlimited(g, 3, 5),
      difference_of_gaussians(g, L / 14.0, 2.0),
      single_mode(g, 2, 1, ModeKind::cosine, 0.7) + centered_gaussian(g, L / 10.0),
      gaussian_bump(g, 0.3 * L, 0.3 * L, L / 12.0, 3.0),
  };
}

}  // namespace

std::vector<ExponentFamily> standard_exponent_families(double box_side) {
  return {
      ExponentFamily{"logdrift", {{"base", 2.0}, {"amp", 1.5}}},
      ExponentFamily{"bump", {{"base", 1.5}, {"amp", 2.0}, {"width", box_side / 6.0}}},
      ExponentFamily{"wave", {{"base", 3.0}, {"amp", 1.0}, {"k", 1.0}}},
      ExponentFamily{"split", {{"left", 1.8}, {"right", 4.0}}},
  };
}

NormAxiomStats norm_axiom_stats(const Grid2D& grid, std::uint64_t seed, int pairs) {
  NormAxiomStats st;
  st.pairs = pairs;
  std::mt19937_64 rng(seed);
  std::vector<Exponent> exps;
  for (const ExponentFamily& fam : standard_exponent_families(grid.box_side())) {
    exps.push_back(make_exponent(grid, fam));
  }
  for (int i = 0; i < pairs; ++i) {
    const int band_f = 1 + static_cast<int>(rng() % 8);
    const int band_g = 1 + static_cast<int>(rng() % 8);
    const ScalarField f = random_bandlimited(grid, rng(), band_f, uniform(rng, 0.1, 10.0));
    const ScalarField g = random_bandlimited(grid, rng(), band_g, uniform(rng, 0.1, 10.0));
    const double c = uniform(rng, -5.0, 5.0);
    const Exponent& p = exps[static_cast<std::size_t>(i) % exps.size()];
    const LuxemburgResult nf = luxemburg_norm(f, p);
    const double ng = lp_norm(g, p);
    const double nfg = lp_norm(f + g, p);
    const double ncf = lp_norm(c * f, p);
    st.homogeneity =
        std::max(st.homogeneity, std::abs(ncf - std::abs(c) * nf.norm_value) / (std::abs(c) * nf.norm_value));
    st.triangle_slack = std::max(st.triangle_slack, (nfg - nf.norm_value - ng) / (nf.norm_value + ng));
    st.unit_modular = std::max(st.unit_modular, std::abs(nf.modular_at_norm - 1.0));
  }
  const ScalarField f = random_bandlimited(grid, seed ^ 0x5bd1e995u, 6, 2.5);
  for (double p : {1.5, 2.0, 3.0, 8.0}) {
    const double lux = lp_norm(f, Exponent::constant(grid, p));
    const double cls = classical_lp_norm(f, p);
    st.constant_consistency = std::max(st.constant_consistency, std::abs(lux - cls) / cls);
  }
  return st;
}

bool StatedConstantStats::holds(double slack) const {
  return sandwich_min >= 0.5 - slack && sandwich_max <= 2.0 + slack &&
         embedding_max <= 1.0 + slack;
}

StatedConstantStats stated_constant_stats(const Grid2D& grid, std::uint64_t seed) {
  StatedConstantStats st;
  st.sandwich_min = std::numeric_limits<double>::infinity();
  const std::vector<ScalarField> fields = constant_test_family(grid);
  std::vector<ScalarField> dictionary;
  for (int i = 0; i < 6; ++i) dictionary.push_back(random_bandlimited(grid, seed + i, 2 + i));
  dictionary.push_back(centered_gaussian(grid, grid.box_side() / 8.0));
  dictionary.push_back(single_mode(grid, 1, 1, ModeKind::cosine));

  for (const ExponentFamily& fam : standard_exponent_families(grid.box_side())) {
    const Exponent p = make_exponent(grid, fam);
    for (const ScalarField& f : fields) {
      std::vector<ScalarField> dict = dictionary;
      dict.push_back(canonical_dual_witness(f, p));
      const DualSandwichReport r = dual_sandwich_check(f, p, dict);
      ++st.sandwich_cases;
      st.sandwich_min = std::min(st.sandwich_min, r.ratio);
      st.sandwich_max = std::max(st.sandwich_max, r.ratio);

      // p1 <= p2 pointwise: a constant at p- and the family itself, and the
      // family against a constant at p+ + 1.
      const Exponent lo = Exponent::constant(grid, p.p_minus());
      const Exponent hi = Exponent::constant(grid, p.p_plus() + 1.0);
      for (const auto& [a, b] : {std::pair{&lo, &p}, std::pair{&p, &hi}, std::pair{&lo, &hi}}) {
        const EmbeddingReport e = embedding_check(f, *a, *b);
        if (!e.applicable) continue;
        ++st.embedding_cases;
        st.embedding_max = std::max(st.embedding_max, e.ratio / e.bound);
      }
    }
  }
  return st;
}

std::vector<DecayCase> decay_matrix(const Grid2D& grid) {
  struct Combo {
    double p, q, nu;
  };
  const Combo combos[] = {{2.0, kInfinity, 0.0}, {1.0, 2.0, 0.0}, {2.0, 2.0, 1.0}, {2.0, 4.0, 0.0}};
  std::vector<DecayCase> out;
  for (double alpha : {1.2, 1.5, 2.0}) {
    for (const Combo& c : combos) {
      DecayCase dc{alpha, c.p, c.q, c.nu, {}};
      dc.report = measure_decay_slope(self_similar_probe(grid, alpha, c.p, c.q, c.nu));
      out.push_back(std::move(dc));
    }
  }
  return out;
}

}  // namespace sqg
