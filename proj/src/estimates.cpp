#include "sqg/estimates.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "sqg/error.hpp"
#include "sqg/generators.hpp"
#include "sqg/lebesgue.hpp"
#include "sqg/maximal.hpp"
#include "sqg/mild.hpp"
#include "sqg/riesz_potential.hpp"

namespace sqg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double slope_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

// Smooth mean-zero test fields with L-relative length scales.
std::vector<ScalarField> probe_fields(const Grid2D& g) {
  const double L = g.box_side();
  return {
      single_mode(g, 1, 0, ModeKind::sine) + single_mode(g, 0, 2, ModeKind::cosine, 0.5),
      difference_of_gaussians(g, L / 16.0),
      random_bandlimited(g, 11, 6),
      project_mean(gaussian_bump(g, 0.35 * L, 0.6 * L, L / 20.0)),
  };
}

}  // namespace

std::vector<EstimateScenario> default_estimate_family() {
  std::vector<EstimateScenario> out;
  out.push_back({"modes", [](const Grid2D& g) {
                   return single_mode(g, 1, 0, ModeKind::sine) +
                          single_mode(g, 0, 2, ModeKind::cosine);
                 },
                 [](const Grid2D& g) { return single_mode(g, 1, 1, ModeKind::cosine, 0.5); }});
  out.push_back({"dog", [](const Grid2D& g) { return difference_of_gaussians(g, g.box_side() / 12.0); },
                 nullptr});
  out.push_back({"random", [](const Grid2D& g) { return random_bandlimited(g, 7, 4); },
                 [](const Grid2D& g) { return random_bandlimited(g, 8, 3, 0.5); }});
  return out;
}

EstimateReport estimate_suite(const SolverConfig& config,
                              const std::vector<EstimateScenario>& family,
                              const std::vector<double>& final_times) {
  if (family.empty()) throw PreconditionError("estimate_suite: empty scenario family");
  if (final_times.empty()) throw PreconditionError("estimate_suite: empty final-time list");
  EstimateReport report;
  std::vector<double> c1x, c1y, c2x, c2y;
  for (double T : final_times) {
    const SolverConfig cfg = config.with_final_time(T);
    const double tf = cfg.time_factor();
    for (const EstimateScenario& sc : family) {
      EstimateRow row;
      row.scenario = sc.name;
      row.T = T;
      const ScalarField theta0 = sc.theta0(cfg.grid());
      const Trajectory zero(cfg.grid(), cfg.time());
      const Trajectory forcing =
          sc.forcing ? Trajectory::constant(sc.forcing(cfg.grid()), cfg.time()) : zero;
      const DataNorms dn = data_norms(theta0, forcing, cfg);
      row.forcing_lq = dn.forcing_lq;

      const Trajectory lin = linear_part(theta0, zero, cfg);
      const double lin_norm = xt_norm(lin, cfg);
      if (dn.theta0 > 0.0) {
        row.linear_ratio = lin_norm / (tf * dn.theta0);
        c1x.push_back(tf * dn.theta0);
        c1y.push_back(lin_norm);
      } else {
        row.linear_ratio = kNaN;
        report.notes.push_back(sc.name + ": zero initial data, linear ratio skipped");
      }

      if (dn.forcing_l1 > 0.0) {
        const double fn = xt_norm(duhamel_forcing(forcing, cfg), cfg);
        row.forcing_ratio = fn / (tf * dn.forcing_l1);
        c1x.push_back(tf * dn.forcing_l1);
        c1y.push_back(fn);
      } else {
        row.forcing_ratio = kNaN;
      }

      if (lin_norm > 0.0) {
        const double bn = xt_norm(bilinear_B(lin, lin, cfg), cfg);
        const double rhs = (1.0 + T) * lin_norm * lin_norm;
        row.bilinear_ratio = bn / rhs;
        c2x.push_back(rhs);
        c2y.push_back(bn);
      } else {
        row.bilinear_ratio = kNaN;
        report.notes.push_back(sc.name + ": zero trajectory, bilinear ratio skipped");
      }

      for (double r : {row.linear_ratio, row.forcing_ratio}) {
        if (std::isfinite(r)) report.c1_max = std::max(report.c1_max, r);
      }
      if (std::isfinite(row.bilinear_ratio)) {
        report.c2_max = std::max(report.c2_max, row.bilinear_ratio);
      }
      report.rows.push_back(std::move(row));
    }
  }
  report.c1_fit = slope_through_origin(c1x, c1y);
  report.c2_fit = slope_through_origin(c2x, c2y);
  return report;
}

double holder_constant(const Grid2D& grid) {
  const Exponent p1 = make_exponent(grid, ExponentFamily{"logdrift", {{"base", 3.0}, {"amp", 1.0}}});
  const Exponent p2 =
      make_exponent(grid, ExponentFamily{"wave", {{"base", 4.0}, {"amp", 0.5}, {"k", 1.0}}});
  const std::vector<ScalarField> fields = probe_fields(grid);
  double c = 0.0;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    c = std::max(c, holder_product_check(fields[i], fields[(i + 1) % fields.size()], p1, p2));
  }
  return c;
}

double maximal_constant(const Grid2D& grid) {
  const Exponent p = make_exponent(
      grid, ExponentFamily{"bump", {{"base", 2.5}, {"amp", 1.0}, {"width", grid.box_side() / 6.0}}});
  double c = 0.0;
  for (const ScalarField& f : probe_fields(grid)) {
    c = std::max(c, lp_norm(maximal_function(f), p) / lp_norm(f, p));
  }
  return c;
}

double riesz_potential_constant(const Grid2D& grid) {
  // 1/q = 1/p - beta/2 with p = 2, beta = 1/2.
  const double beta = 0.5;
  const double p = 2.0;
  const double q = 1.0 / (1.0 / p - beta / 2.0);
  double c = 0.0;
  for (const ScalarField& f : probe_fields(grid)) {
    c = std::max(c, classical_lp_norm(riesz_potential_2d(f, beta), q) / classical_lp_norm(f, p));
  }
  return c;
}

EstimateConstants measure_estimate_constants(const Grid2D& grid, const SolverParams& params) {
  EstimateConstants out;
  out.holder = holder_constant(grid);
  out.maximal = maximal_constant(grid);
  out.riesz_potential = riesz_potential_constant(grid);
  const SolverConfig cfg(grid, params);
  const EstimateReport est = estimate_suite(cfg, default_estimate_family(), {params.T});
  out.linear = est.c1_max;
  out.bilinear = est.c2_max;
  return out;
}

}  // namespace sqg
