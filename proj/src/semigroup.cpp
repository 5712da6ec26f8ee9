#include "sqg/semigroup.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sqg/error.hpp"
#include "sqg/generators.hpp"
#include "sqg/lebesgue.hpp"
#include "sqg/spectral_ops.hpp"

namespace sqg {

namespace {

void require_semigroup_args(double t, double alpha, double nu) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("semigroup time must be >= 0");
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw DomainError("dissipation order alpha must lie in (0, 2], got " + std::to_string(alpha));
  }
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("derivative order nu must be >= 0");
}

}  // namespace

void apply_semigroup_inplace(SpectralField& F, double t, double alpha, double nu) {
  require_semigroup_args(t, alpha, nu);
  if (t == 0.0 && nu == 0.0) return;
  apply_multiplier(F, [t, alpha, nu](int k1, int k2, double xi1, double xi2) -> Complex {
    if (k1 == 0 && k2 == 0) return nu == 0.0 ? 1.0 : 0.0;
    const double r = std::hypot(xi1, xi2);
    return std::pow(r, nu) * std::exp(-t * std::pow(r, alpha));
  });
}

ScalarField apply_semigroup(const ScalarField& f, double t, double alpha, double nu) {
  SpectralField F = to_spectral(f);
  apply_semigroup_inplace(F, t, alpha, nu);
  return from_spectral(F);
}

double semigroup_composition_check(const ScalarField& f, double t, double s, double alpha) {
  // Both sides see exactly one forward and one inverse transform.
  const SpectralField F = to_spectral(f);
  SpectralField twice = F;
  apply_semigroup_inplace(twice, t, alpha);
  apply_semigroup_inplace(twice, s, alpha);
  SpectralField once = F;
  apply_semigroup_inplace(once, t + s, alpha);
  return max_abs_difference(from_spectral(twice), from_spectral(once));
}

void DecayProbe::validate() const {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("probe alpha must lie in (0, 2]");
  if (!(p >= 1.0) || !(q >= p)) throw DomainError("probe needs 1 <= p <= q");
  if (!(nu >= 0.0)) throw DomainError("probe nu must be >= 0");
  if (times.size() < 4) throw ConfigError("probe needs at least 4 times");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0)) throw ConfigError("probe times must be positive");
    if (i > 0 && !(times[i] > times[i - 1])) throw ConfigError("probe times must increase strictly");
  }
  if (!test_field && !self_similar_family) {
    throw ConfigError("probe needs a test field or a self-similar family");
  }
}

double DecayProbe::theoretical_slope() const {
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  return -nu / alpha - (2.0 / alpha) * (1.0 / p - inv_q);
}

bool SlopeReport::passes(double slope_tol, double min_r_squared) const {
  return !degenerate && std::abs(measured_slope - theoretical_slope) <= slope_tol &&
         r_squared >= min_r_squared;
}

DecayProbe self_similar_probe(const Grid2D& grid, double alpha, double p, double q, double nu,
                              int count, double kappa) {
  DecayProbe probe;
  probe.alpha = alpha;
  probe.p = p;
  probe.q = q;
  probe.nu = nu;
  probe.times = decay_window(grid, alpha, count);
  probe.self_similar_family = [grid, kappa](double scale) {
    return difference_of_gaussians(grid, kappa * scale);
  };
  return probe;
}

double kernel_width(double t, double alpha) {
  return 2.0 * std::numbers::pi * std::pow(t, 1.0 / alpha);
}

std::vector<double> decay_window(const Grid2D& grid, double alpha, int count) {
  if (count < 2) throw ConfigError("decay window needs at least two times");
  const double w_lo = 8.0 * grid.spacing();
  const double w_hi = grid.box_side() / 8.0;
  const double t_lo = std::pow(w_lo / (2.0 * std::numbers::pi), alpha);
  const double t_hi = std::pow(w_hi / (2.0 * std::numbers::pi), alpha);
  std::vector<double> t(count);
  for (int i = 0; i < count; ++i) {
    t[i] = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (count - 1));
  }
  return t;
}

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ShapeError("least_squares needs matching samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = (sxx > 0.0 && syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 0.0;
  return fit;
}

SlopeReport measure_decay_slope(const DecayProbe& probe) {
  probe.validate();
  SlopeReport rep;
  rep.theoretical_slope = probe.theoretical_slope();
  std::vector<double> log_t, log_r;
  for (double t : probe.times) {
    const ScalarField f = probe.self_similar_family
                              ? probe.self_similar_family(std::pow(t, 1.0 / probe.alpha))
                              : *probe.test_field;
    const double in = classical_lp_norm(f, probe.p);
    if (in == 0.0) throw DomainError("decay probe field vanishes");
    const double out = classical_lp_norm(apply_semigroup(f, t, probe.alpha, probe.nu), probe.q);
    const double ratio = out / in;
    rep.per_time_norms.emplace_back(t, ratio);
    log_t.push_back(std::log(t));
    log_r.push_back(std::log(ratio));
  }
  double lo = rep.per_time_norms.front().second;
  double hi = lo;
  for (const auto& [t, r] : rep.per_time_norms) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  if (hi - lo <= 1e-14 * hi) {
    rep.degenerate = true;
    rep.measured_slope = 0.0;
    rep.r_squared = 0.0;
    return rep;
  }
  const LinearFit fit = least_squares(log_t, log_r);
  rep.measured_slope = fit.slope;
  rep.r_squared = fit.r_squared;
  return rep;
}

}  // namespace sqg
