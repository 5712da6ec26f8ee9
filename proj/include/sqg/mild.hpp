#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqg/lebesgue.hpp"
#include "sqg/trajectory.hpp"

namespace sqg {

/// Per-node classical L^p norms of a trajectory.
std::vector<double> norm_series(const Trajectory& traj, double p);

/// Luxemburg norm in time of a norm series against a temporal exponent.
/// Throws DataError on non-finite entries.
LuxemburgResult xt_norm(std::span<const double> norm_series, const Exponent& q);
/// X_T norm: L^{q(.)} in time of the L^p norms in space.
double xt_norm(const Trajectory& traj, const SolverConfig& config);

/// G_{t_i} theta0 plus the forcing Duhamel integral, with the integrand frozen
/// at the left end of every time cell and propagated exactly by the semigroup.
/// Requires mean-zero data (DomainError otherwise).
Trajectory linear_part(const ScalarField& theta0, const Trajectory& forcing,
                       const SolverConfig& config);

/// Duhamel integral of div(u(theta_a) theta_b), left-endpoint product rule.
Trajectory bilinear_B(const Trajectory& theta_a, const Trajectory& theta_b,
                      const SolverConfig& config);

/// Forcing-only part of linear_part (theta0 = 0).
Trajectory duhamel_forcing(const Trajectory& forcing, const SolverConfig& config);

struct PicardState {
  int iterate_index = 0;
  /// Kept for the final state, and for every state when keep_history is set.
  std::optional<Trajectory> trajectory;
  double xt_norm = 0.0;
  /// X_T norm of the difference with the previous iterate.
  double residual = 0.0;
  /// residual_k / residual_{k-1}; NaN for the first iterate or a zero denominator.
  double contraction_ratio = 0.0;
};

struct SmallnessAdvisory {
  double threshold = 0.0;
  double data_norm = 0.0;
  bool holds = false;
};

struct PicardOptions {
  /// Defaults to the zero trajectory, making iterate 1 the linear part.
  std::optional<Trajectory> initial_guess;
  bool keep_history = false;
  /// When both constants are given the smallness advisory is computed.
  std::optional<double> c1;
  std::optional<double> c2;
  /// An iterate with X_T norm above this is reported as overflow.
  double overflow_norm = 1e100;
};

struct PicardResult {
  std::vector<PicardState> states;
  bool converged = false;
  /// Non-finite values or overflow met during the iteration.
  bool diverged = false;
  /// X_T norm of the linear part.
  double eta = 0.0;
  std::optional<SmallnessAdvisory> smallness;

  const PicardState& final_state() const { return states.back(); }
  const Trajectory& solution() const { return *states.back().trajectory; }
  int iterations() const { return static_cast<int>(states.size()); }
};

/// theta^{k+1} = linear_part - B(theta^k, theta^k) until the residual drops
/// below picard_tol * max(1, xt_norm) or picard_max_iter iterates are made.
/// Divergence is recorded in the result, never thrown.
PicardResult picard_solve(const ScalarField& theta0, const Trajectory& forcing,
                          const SolverConfig& config, const PicardOptions& options = {});

/// 1 / (4 C1 C2 (1 + T) max{T^(1/q-), T^(1/q+)}). DomainError for C1, C2 <= 0.
double smallness_threshold(const SolverConfig& config, double c1, double c2);

struct DataNorms {
  double theta0 = 0.0;         // ||theta0||_{p_bar(.)}
  double forcing_l1 = 0.0;     // ||f||_{L^1_t L^{p_bar(.)}_x}
  double forcing_lq = 0.0;     // ||f||_{L^{q(.)}_t L^{p_bar(.)}_x}
  double total() const { return theta0 + forcing_l1; }
};

DataNorms data_norms(const ScalarField& theta0, const Trajectory& forcing,
                     const SolverConfig& config);

/// X_T norm of theta - (linear_part - B(theta, theta)).
double fixed_point_residual(const Trajectory& theta, const ScalarField& theta0,
                            const Trajectory& forcing, const SolverConfig& config);

/// Max over interior nodes of the L^p norm of
/// d_t theta + u . grad theta + Lambda^alpha theta - f, with d_t by centered differences.
double pde_residual(const Trajectory& theta, const Trajectory& forcing, const SolverConfig& config);

}  // namespace sqg
