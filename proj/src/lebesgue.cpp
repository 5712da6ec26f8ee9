#include "sqg/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sqg/error.hpp"

namespace sqg {

namespace {

constexpr double kBisectionWidth = 1e-12;
constexpr double kTinyLambda = 1e-300;

std::span<const double> as_span(const ScalarField& f) { return f.values(); }

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw DataError(std::string(what) + ": input contains NaN or Inf");
  }
}

}  // namespace

double classical_lp_norm(std::span<const double> values, std::span<const double> weights,
                         double p) {
  if (!(p >= 1.0)) throw DomainError("Lebesgue exponent must be >= 1, got " + std::to_string(p));
  if (values.size() != weights.size()) throw ShapeError("classical_lp_norm: weight count mismatch");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  // Scale by the max to keep |f|^p representable for large p.
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += weights[i] * std::pow(std::abs(values[i]) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double classical_lp_norm(const ScalarField& f, double p) {
  if (!(p >= 1.0)) throw DomainError("Lebesgue exponent must be >= 1, got " + std::to_string(p));
  const double h2 = f.grid().cell_area();
  if (std::isinf(p)) return f.max_abs();
  const double m = f.max_abs();
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : f.values()) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s * h2, 1.0 / p);
}

double modular(std::span<const double> values, const Exponent& p) {
  if (values.size() != p.size()) {
    throw ShapeError("modular: " + std::to_string(values.size()) + " samples vs exponent with " +
                     std::to_string(p.size()));
  }
  const auto w = p.weights();
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += w[i] * std::pow(std::abs(values[i]), p[i]);
  return s;
}

double modular(const ScalarField& f, const Exponent& p) {
  require_same_grid(f.grid(), p.grid(), "modular");
  return modular(as_span(f), p);
}

LuxemburgResult luxemburg_norm(std::span<const double> values, const Exponent& p) {
  if (values.size() != p.size()) {
    throw ShapeError("luxemburg_norm: " + std::to_string(values.size()) +
                     " samples vs exponent with " + std::to_string(p.size()));
  }
  require_finite(values, "luxemburg_norm");

  struct Term {
    double a, p, w;
  };
  std::vector<Term> terms;
  const auto w = p.weights();
  double amax = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double a = std::abs(values[i]);
    if (a == 0.0) continue;
    terms.push_back({a, p[i], w[i]});
    amax = std::max(amax, a);
  }
  LuxemburgResult out;
  if (terms.empty()) return out;

  auto rho = [&terms](double lambda) {
    double s = 0.0;
    for (const Term& t : terms) s += t.w * std::pow(t.a / lambda, t.p);
    return s;
  };

  double guess = 0.0;
  {
    double s = 0.0;
    for (const Term& t : terms) s += t.w * std::pow(t.a / amax, p.p_plus());
    guess = amax * std::pow(s, 1.0 / p.p_plus());
    if (!(guess > 0.0) || !std::isfinite(guess)) guess = amax;
  }

  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  if (rho(guess) > 1.0) {
    lo = guess;
    hi = 2.0 * guess;
    while (rho(hi) > 1.0) {
      lo = hi;
      hi *= 2.0;
      ++iterations;
    }
  } else {
    hi = guess;
    lo = 0.5 * guess;
    while (lo > kTinyLambda && rho(lo) <= 1.0) {
      hi = lo;
      lo *= 0.5;
      ++iterations;
    }
  }
  while (hi - lo > kBisectionWidth * hi && iterations < 400) {
    const double mid = 0.5 * (lo + hi);
    if (rho(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  out.norm_value = hi;
  out.modular_at_norm = rho(hi);
  out.iterations = iterations;
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  return out;
}

LuxemburgResult luxemburg_norm(const ScalarField& f, const Exponent& p) {
  require_same_grid(f.grid(), p.grid(), "luxemburg_norm");
  return luxemburg_norm(as_span(f), p);
}

double lp_norm(const ScalarField& f, const Exponent& p) { return luxemburg_norm(f, p).norm_value; }

LogHolderReport log_holder_check(const Exponent& p) {
  const Grid2D& g = p.grid();
  const int n = g.n_points();
  const double h = g.spacing();
  const double c = g.center();
  auto inv = [&](int i1, int i2) { return 1.0 / p[static_cast<std::size_t>(i1) * n + i2]; };

  LogHolderReport rep;
  rep.p_infinity = p.p_infinity();

  const int stride = std::max(1, n / 64);
  struct Sample {
    double x1, x2, inv_p;
  };
  std::vector<Sample> samples;
  for (int i1 = 0; i1 < n; i1 += stride) {
    for (int i2 = 0; i2 < n; i2 += stride) {
      samples.push_back({g.coordinate(i1), g.coordinate(i2), inv(i1, i2)});
    }
  }
  for (std::size_t a = 0; a < samples.size(); ++a) {
    for (std::size_t b = a + 1; b < samples.size(); ++b) {
      const double diff = std::abs(samples[a].inv_p - samples[b].inv_p);
      if (diff == 0.0) continue;
      const double d = std::hypot(samples[a].x1 - samples[b].x1, samples[a].x2 - samples[b].x2);
      rep.c_local = std::max(rep.c_local, diff * std::log(std::numbers::e + 1.0 / d));
    }
  }

  auto neighbour_oscillation = [&](int step) {
    double osc = 0.0;
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        if (i1 + step < n) osc = std::max(osc, std::abs(inv(i1, i2) - inv(i1 + step, i2)));
        if (i2 + step < n) osc = std::max(osc, std::abs(inv(i1, i2) - inv(i1, i2 + step)));
      }
    }
    return osc;
  };
  rep.oscillation_h = neighbour_oscillation(1);
  rep.oscillation_2h = neighbour_oscillation(2);
  rep.c_local = std::max(rep.c_local, rep.oscillation_h * std::log(std::numbers::e + 1.0 / h));

  const double inv_inf = 1.0 / p.p_infinity();
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const double r = std::hypot(g.coordinate(i1) - c, g.coordinate(i2) - c);
      rep.c_infinity =
          std::max(rep.c_infinity, std::abs(inv(i1, i2) - inv_inf) * std::log(std::numbers::e + r));
    }
  }

  rep.log_holder = !(rep.oscillation_h > 1e-12 && rep.oscillation_h > 0.75 * rep.oscillation_2h);
  return rep;
}

double holder_product_check(const ScalarField& f, const ScalarField& g, const Exponent& p1,
                            const Exponent& p2) {
  const Exponent p = harmonic_sum(p1, p2);
  const ScalarField fg = multiply(f, g);
  if (fg.max_abs() == 0.0) return 0.0;
  const double denom = lp_norm(f, p1) * lp_norm(g, p2);
  return lp_norm(fg, p) / denom;
}

ScalarField canonical_dual_witness(const ScalarField& f, const Exponent& p) {
  require_same_grid(f.grid(), p.grid(), "canonical_dual_witness");
  ScalarField w(f.grid());
  const double norm = lp_norm(f, p);
  if (norm == 0.0) return w;
  for (std::size_t i = 0; i < f.size(); ++i) w[i] = std::pow(std::abs(f[i]) / norm, p[i] - 1.0);
  return w;
}

DualSandwichReport dual_sandwich_check(const ScalarField& f, const Exponent& p,
                                       const std::vector<ScalarField>& dictionary) {
  if (dictionary.empty()) throw ConfigError("dual_sandwich_check: empty dictionary");
  DualSandwichReport rep;
  rep.norm = lp_norm(f, p);
  if (rep.norm == 0.0) return rep;
  const Exponent dual = conjugate_exponent(p);
  const double h2 = f.grid().cell_area();
  for (const ScalarField& g : dictionary) {
    require_same_grid(f.grid(), g.grid(), "dual_sandwich_check");
    const double gn = lp_norm(g, dual);
    if (gn == 0.0) continue;
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += std::abs(f[i] * g[i]);
    rep.sup_integral = std::max(rep.sup_integral, s * h2 / gn);
  }
  rep.ratio = rep.sup_integral / rep.norm;
  rep.upper_holds = rep.ratio <= 2.0 + 1e-6;
  rep.lower_holds = rep.ratio >= 0.5 - 1e-6;
  return rep;
}

EmbeddingReport embedding_check(const ScalarField& f, const Exponent& p1, const Exponent& p2) {
  if (!p1.same_domain(p2)) throw ShapeError("embedding_check: exponents live on different domains");
  EmbeddingReport rep;
  rep.bound = 1.0 + p1.measure();
  rep.applicable = true;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p1[i] > p2[i]) {
      rep.applicable = false;
      return rep;
    }
  }
  const double n2 = lp_norm(f, p2);
  rep.ratio = n2 == 0.0 ? 0.0 : lp_norm(f, p1) / n2;
  rep.holds = rep.ratio <= rep.bound * (1.0 + 1e-8);
  return rep;
}

EmbeddingClassReport embedding_class_check(double p, const Exponent& pbar) {
  const Grid2D& g = pbar.grid();
  EmbeddingClassReport rep;
  rep.lower_bound_ok = p <= pbar.p_minus() * (1.0 + 1e-12);
  const int n = g.n_points();
  const int rings = std::max(4, n / 4);
  const double dr = 0.5 * g.box_side() / rings;
  std::vector<double> ring_min(rings, kInfinity);
  std::vector<bool> seen(rings, false);
  const double c = g.center();
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const double r = std::hypot(g.coordinate(i1) - c, g.coordinate(i2) - c);
      const int k = static_cast<int>(r / dr);
      if (k >= rings) continue;  // corners beyond the inscribed disc
      const double pb = pbar[static_cast<std::size_t>(i1) * n + i2];
      const double q = pb > p ? p * pb / (pb - p) : kInfinity;
      ring_min[k] = std::min(ring_min[k], q);
      seen[k] = true;
    }
  }
  std::vector<double> profile;
  for (int k = 0; k < rings; ++k) {
    if (seen[k]) profile.push_back(ring_min[k]);
  }
  bool monotone = true;
  for (std::size_t k = 1; k < profile.size(); ++k) {
    if (profile[k] < profile[k - 1] * (1.0 - 1e-9)) monotone = false;
  }
  const bool all_infinite =
      std::all_of(profile.begin(), profile.end(), [](double q) { return std::isinf(q); });
  rep.grows_outward = monotone && (all_infinite || profile.back() > profile.front());
  return rep;
}

UnboundedEmbeddingReport embedding_unbounded_check(const ScalarField& f, double p,
                                                   const Exponent& pbar) {
  UnboundedEmbeddingReport rep;
  rep.membership = embedding_class_check(p, pbar);
  const double nb = lp_norm(f, pbar);
  rep.ratio = nb == 0.0 ? 0.0 : classical_lp_norm(f, p) / nb;
  return rep;
}

}  // namespace sqg
