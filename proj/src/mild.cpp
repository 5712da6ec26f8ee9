#include "sqg/mild.hpp"

#include <cmath>
#include <limits>

#include "sqg/error.hpp"
#include "sqg/semigroup.hpp"
#include "sqg/spectral_ops.hpp"

namespace sqg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// out_0 = 0, out_i = E (out_{i-1} + dt src_{i-1}) with E = G_dt.
std::vector<SpectralField> duhamel_recursion(const std::vector<SpectralField>& src, double dt,
                                             double alpha) {
  std::vector<SpectralField> out;
  out.reserve(src.size());
  out.emplace_back(src.front().grid());
  for (std::size_t i = 1; i < src.size(); ++i) {
    SpectralField next = out.back();
    next.add_scaled(dt, src[i - 1]);
    apply_semigroup_inplace(next, dt, alpha);
    out.push_back(std::move(next));
  }
  return out;
}

Trajectory to_trajectory(const TimeGrid& time, const std::vector<SpectralField>& spec) {
  std::vector<ScalarField> nodes;
  nodes.reserve(spec.size());
  for (const SpectralField& F : spec) nodes.push_back(from_spectral(F));
  return Trajectory(time, std::move(nodes));
}

bool finite_trajectory(const Trajectory& t) {
  for (const ScalarField& f : t.nodes()) {
    if (!f.all_finite()) return false;
  }
  return true;
}

}  // namespace

std::vector<double> norm_series(const Trajectory& traj, double p) {
  std::vector<double> out;
  out.reserve(traj.size());
  for (const ScalarField& f : traj.nodes()) out.push_back(classical_lp_norm(f, p));
  return out;
}

LuxemburgResult xt_norm(std::span<const double> series, const Exponent& q) {
  if (q.is_spatial()) throw DomainError("xt_norm needs a temporal exponent");
  for (double v : series) {
    if (!std::isfinite(v)) throw DataError("xt_norm: non-finite entry in norm series");
  }
  return luxemburg_norm(series, q);
}

double xt_norm(const Trajectory& traj, const SolverConfig& config) {
  require_matches(traj, config, "xt_norm");
  const std::vector<double> s = norm_series(traj, config.p());
  return xt_norm(s, config.q()).norm_value;
}

Trajectory duhamel_forcing(const Trajectory& forcing, const SolverConfig& config) {
  require_matches(forcing, config, "duhamel_forcing");
  if (!forcing.all_mean_zero()) throw DomainError("forcing must be mean-zero at every node");
  std::vector<SpectralField> src;
  src.reserve(forcing.size());
  for (const ScalarField& f : forcing.nodes()) src.push_back(to_spectral(f));
  return to_trajectory(config.time(), duhamel_recursion(src, config.time().step(), config.alpha()));
}

Trajectory linear_part(const ScalarField& theta0, const Trajectory& forcing,
                       const SolverConfig& config) {
  require_same_grid(theta0.grid(), config.grid(), "linear_part");
  if (!theta0.is_mean_zero()) throw DomainError("initial data must be mean-zero");
  Trajectory out = duhamel_forcing(forcing, config);
  const SpectralField hat0 = to_spectral(theta0);
  for (int i = 0; i < out.size(); ++i) {
    SpectralField g = hat0;
    apply_semigroup_inplace(g, config.time().node(i), config.alpha());
    out[i] += from_spectral(g);
  }
  return out;
}

Trajectory bilinear_B(const Trajectory& theta_a, const Trajectory& theta_b,
                      const SolverConfig& config) {
  require_matches(theta_a, config, "bilinear_B");
  require_matches(theta_b, config, "bilinear_B");
  const bool dealias = config.params().dealias;
  std::vector<SpectralField> src;
  src.reserve(theta_a.size());
  // The last node never enters the left-endpoint sum.
  for (int j = 0; j < theta_a.size(); ++j) {
    if (j + 1 == theta_a.size()) {
      src.emplace_back(config.grid());
      break;
    }
    const SpectralField a = to_spectral(theta_a[j]);
    const SpectralField b = to_spectral(theta_b[j]);
    const SpectralVector u = velocity_from_theta(a);
    SpectralField flux1 = spectral_product(u[0], b, dealias);
    SpectralField flux2 = spectral_product(u[1], b, dealias);
    partial_derivative_inplace(flux1, 1);
    partial_derivative_inplace(flux2, 2);
    flux1 += flux2;
    src.push_back(std::move(flux1));
  }
  return to_trajectory(config.time(), duhamel_recursion(src, config.time().step(), config.alpha()));
}

PicardResult picard_solve(const ScalarField& theta0, const Trajectory& forcing,
                          const SolverConfig& config, const PicardOptions& options) {
  const Trajectory lin = linear_part(theta0, forcing, config);
  PicardResult result;
  result.eta = xt_norm(lin, config);
  if (options.c1 && options.c2) {
    SmallnessAdvisory adv;
    adv.threshold = smallness_threshold(config, *options.c1, *options.c2);
    adv.data_norm = data_norms(theta0, forcing, config).total();
    adv.holds = adv.data_norm <= adv.threshold;
    result.smallness = adv;
  }

  Trajectory prev = options.initial_guess ? *options.initial_guess
                                          : Trajectory(config.grid(), config.time());
  require_matches(prev, config, "picard_solve initial guess");
  const double tol = config.params().picard_tol;
  double prev_residual = kNaN;

  for (int k = 1; k <= config.params().picard_max_iter; ++k) {
    Trajectory next = lin;
    if (!prev.is_zero()) {
      std::optional<Trajectory> b;
      try {
        b = bilinear_B(prev, prev, config);
      } catch (const DataError&) {
      }
      if (!b || !finite_trajectory(*b)) {
        result.diverged = true;
        break;
      }
      next -= *b;
    }
    PicardState st;
    st.iterate_index = k;
    try {
      st.xt_norm = xt_norm(next, config);
      st.residual = xt_norm(next - prev, config);
    } catch (const DataError&) {
      st.xt_norm = st.residual = kNaN;
    }
    st.contraction_ratio =
        (std::isnan(prev_residual) || prev_residual == 0.0) ? kNaN : st.residual / prev_residual;
    if (!options.keep_history && !result.states.empty()) result.states.back().trajectory.reset();
    st.trajectory = next;
    if (!std::isfinite(st.xt_norm) || st.xt_norm > options.overflow_norm) {
      result.diverged = true;
      result.states.push_back(std::move(st));
      break;
    }
    const bool done = st.residual <= tol * std::max(1.0, st.xt_norm);
    result.states.push_back(std::move(st));
    if (done) {
      result.converged = true;
      break;
    }
    prev_residual = result.states.back().residual;
    prev = std::move(next);
  }
  if (result.states.empty()) {
    PicardState st;
    st.trajectory = prev;
    st.xt_norm = kNaN;
    st.residual = kNaN;
    st.contraction_ratio = kNaN;
    result.states.push_back(std::move(st));
  }
  return result;
}

double smallness_threshold(const SolverConfig& config, double c1, double c2) {
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw DomainError("smallness constants must be positive");
  const double T = config.final_time();
  return 1.0 / (4.0 * c1 * c2 * (1.0 + T) * config.time_factor());
}

DataNorms data_norms(const ScalarField& theta0, const Trajectory& forcing,
                     const SolverConfig& config) {
  require_matches(forcing, config, "data_norms");
  DataNorms out;
  out.theta0 = lp_norm(theta0, config.p_bar());
  std::vector<double> series;
  series.reserve(forcing.size());
  for (const ScalarField& f : forcing.nodes()) series.push_back(lp_norm(f, config.p_bar()));
  const std::vector<double> w = config.time().weights();
  for (std::size_t i = 0; i < series.size(); ++i) out.forcing_l1 += w[i] * series[i];
  out.forcing_lq = xt_norm(series, config.q()).norm_value;
  return out;
}

double fixed_point_residual(const Trajectory& theta, const ScalarField& theta0,
                            const Trajectory& forcing, const SolverConfig& config) {
  Trajectory map = linear_part(theta0, forcing, config);
  map -= bilinear_B(theta, theta, config);
  return xt_norm(theta - map, config);
}

double pde_residual(const Trajectory& theta, const Trajectory& forcing, const SolverConfig& config) {
  require_matches(theta, config, "pde_residual");
  require_matches(forcing, config, "pde_residual");
  const double dt = config.time().step();
  const bool dealias = config.params().dealias;
  double worst = 0.0;
  for (int i = 1; i + 1 < theta.size(); ++i) {
    ScalarField r = (0.5 / dt) * (theta[i + 1] - theta[i - 1]);
    r += nonlinear_term(velocity_from_theta(theta[i]), theta[i], dealias);
    r += fractional_laplacian(theta[i], config.alpha());
    r -= forcing[i];
    worst = std::max(worst, classical_lp_norm(r, config.p()));
  }
  return worst;
}

}  // namespace sqg
