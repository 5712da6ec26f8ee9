#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sqg/trajectory.hpp"

namespace sqg {

/// Data generator for the estimate laboratory. Forcing is constant in time;
/// an empty forcing function means f = 0.
struct EstimateScenario {
  std::string name;
  std::function<ScalarField(const Grid2D&)> theta0;
  std::function<ScalarField(const Grid2D&)> forcing;
};

/// Fixed, resolution-independent family used by the stability checks.
std::vector<EstimateScenario> default_estimate_family();

struct EstimateRow {
  std::string scenario;
  double T = 0.0;
  /// ||G_t theta0||_X / (max{T^(1/q-), T^(1/q+)} ||theta0||_{p_bar(.)}); NaN when skipped.
  double linear_ratio = 0.0;
  /// Forcing analogue with ||f||_{L^1_t L^{p_bar(.)}_x}; NaN when skipped.
  double forcing_ratio = 0.0;
  /// ||B(theta, theta)||_X / ((1 + T) ||theta||_X^2) for theta = G_t theta0; NaN when skipped.
  double bilinear_ratio = 0.0;
  double forcing_lq = 0.0;  // ||f||_{L^{q(.)}_t L^{p_bar(.)}_x}, reported alongside
};

struct EstimateReport {
  std::vector<EstimateRow> rows;
  double c1_max = 0.0;  // max over linear and forcing ratios
  double c2_max = 0.0;
  /// Least-squares slopes through the origin of measured norm against the bound's right side.
  double c1_fit = 0.0;
  double c2_fit = 0.0;
  std::vector<std::string> notes;
};

/// Measures the linear, forcing and bilinear constants for every scenario and
/// every final time. Throws PreconditionError on an empty family or time list.
EstimateReport estimate_suite(const SolverConfig& config,
                              const std::vector<EstimateScenario>& family,
                              const std::vector<double>& final_times);

/// Measured constants of the existential inequalities on one grid.
struct EstimateConstants {
  double holder = 0.0;
  double maximal = 0.0;
  double riesz_potential = 0.0;
  double linear = 0.0;
  double bilinear = 0.0;
};

/// Family maxima of the individual variable-exponent ratios on one grid.
double holder_constant(const Grid2D& grid);
double maximal_constant(const Grid2D& grid);
double riesz_potential_constant(const Grid2D& grid);

/// Family maxima of the Hoelder, maximal-function, Riesz-potential, linear and
/// bilinear ratios with params resampled on the given grid.
EstimateConstants measure_estimate_constants(const Grid2D& grid, const SolverParams& params);

}  // namespace sqg
