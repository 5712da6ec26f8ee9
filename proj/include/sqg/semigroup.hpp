#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sqg/field.hpp"

namespace sqg {

/// Lambda^nu G^alpha_t: multiplier |xi|^nu exp(-t |xi|^alpha). With nu == 0
/// the zero mode is multiplied by 1 (mean preserved). Throws DomainError for
/// t < 0, nu < 0 or alpha outside (0, 2].
ScalarField apply_semigroup(const ScalarField& f, double t, double alpha, double nu = 0.0);
void apply_semigroup_inplace(SpectralField& F, double t, double alpha, double nu = 0.0);

/// Max-abs difference between G_s(G_t f) and G_{t+s} f.
double semigroup_composition_check(const ScalarField& f, double t, double s, double alpha);

/// One (alpha, p, q, nu) probe of the L^p -> L^q smoothing rate.
///
/// With a fixed test field the regressed quantity is
/// ||Lambda^nu G_t f||_q / ||f||_p. When self_similar_family is set the field
/// at time t is family(t^(1/alpha)) instead, i.e. a fixed profile dilated to
/// the kernel scale; by change of variables the ratio is then exactly
/// proportional to t^(-nu/alpha - (2/alpha)(1/p - 1/q)) on the plane, which is
/// the extremal behaviour the decay bound describes for every (p, q).
struct DecayProbe {
  double alpha = 2.0;
  double p = 2.0;
  double q = 2.0;  // kInfinity for the max-abs norm
  double nu = 0.0;
  std::vector<double> times;
  std::optional<ScalarField> test_field;
  std::function<ScalarField(double length_scale)> self_similar_family;

  /// Throws DomainError / ConfigError when the probe is malformed.
  void validate() const;
  double theoretical_slope() const;
};

struct SlopeReport {
  double measured_slope = 0.0;
  double theoretical_slope = 0.0;
  double r_squared = 0.0;
  /// (t, ||Lambda^nu G_t f_t||_q / ||f_t||_p)
  std::vector<std::pair<double, double>> per_time_norms;
  /// All ratios equal to within 1e-14 relative; the slope is then meaningless.
  bool degenerate = false;

  bool passes(double slope_tol = 0.05, double min_r_squared = 0.99) const;
};

SlopeReport measure_decay_slope(const DecayProbe& probe);

/// Probe over decay_window(grid, alpha, count) whose field at time t is a
/// difference of Gaussians of width kappa t^(1/alpha) centered in the box.
DecayProbe self_similar_probe(const Grid2D& grid, double alpha, double p, double q, double nu,
                              int count = 8, double kappa = 2.0);

/// Kernel width 2 pi t^(1/alpha).
double kernel_width(double t, double alpha);

/// Geometric time list whose kernel widths span [8 h, L / 8].
std::vector<double> decay_window(const Grid2D& grid, double alpha, int count);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope x + intercept.
LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sqg
