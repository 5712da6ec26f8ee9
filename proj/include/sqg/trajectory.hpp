#pragma once

#include <string>
#include <vector>

#include "sqg/exponent.hpp"
#include "sqg/field.hpp"

namespace sqg {

/// Reproducible description of a mild-solver run. Exponents are kept as
/// analytic families so they can be resampled on any grid or time interval.
struct SolverParams {
  double alpha = 1.5;
  double mu = 1.0;
  double T = 0.25;
  int n_time = 32;
  double p = 6.0;
  ExponentFamily q{"const", {{"value", 12.0}}};
  ExponentFamily p_bar{"logdrift", {{"base", 6.0}, {"amp", 0.5}}};
  bool dealias = true;
  double picard_tol = 1e-10;
  int picard_max_iter = 60;
  /// Downgrades a violation of q- > 2 from a configuration error to a note.
  bool relax_q_minus = false;
};

/// Validated solver configuration with the exponents sampled.
class SolverConfig {
 public:
  /// Throws ConfigError naming the first violated constraint.
  SolverConfig(const Grid2D& grid, const SolverParams& params);

  const SolverParams& params() const { return params_; }
  const Grid2D& grid() const { return grid_; }
  const TimeGrid& time() const { return time_; }
  const Exponent& q() const { return q_; }
  const Exponent& p_bar() const { return p_bar_; }
  double alpha() const { return params_.alpha; }
  double p() const { return params_.p; }
  double final_time() const { return params_.T; }
  int n_time() const { return params_.n_time; }

  /// Same configuration on a different final time (exponents resampled).
  SolverConfig with_final_time(double T) const;
  SolverConfig with_grid(const Grid2D& grid) const;
  SolverConfig with_n_time(int n_time) const;

  /// max{T^(1/q-), T^(1/q+)}.
  double time_factor() const;
  /// Notes about relaxed constraints; empty for a fully conforming config.
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  SolverParams params_;
  Grid2D grid_;
  TimeGrid time_;
  Exponent q_;
  Exponent p_bar_;
  std::vector<std::string> notes_;
};

/// Fields at the uniform time nodes of a TimeGrid.
class Trajectory {
 public:
  /// n_nodes zero fields.
  Trajectory(const Grid2D& grid, const TimeGrid& time);
  Trajectory(const TimeGrid& time, std::vector<ScalarField> nodes);

  /// Same field at every node.
  static Trajectory constant(const ScalarField& f, const TimeGrid& time);

  const Grid2D& grid() const { return nodes_.front().grid(); }
  const TimeGrid& time() const { return time_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const ScalarField& operator[](int i) const { return nodes_[i]; }
  ScalarField& operator[](int i) { return nodes_[i]; }
  const std::vector<ScalarField>& nodes() const { return nodes_; }

  bool is_zero() const;
  bool all_mean_zero() const;

  Trajectory& operator+=(const Trajectory& other);
  Trajectory& operator-=(const Trajectory& other);
  Trajectory& operator*=(double s);

 private:
  TimeGrid time_;
  std::vector<ScalarField> nodes_;
};

Trajectory operator+(Trajectory a, const Trajectory& b);
Trajectory operator-(Trajectory a, const Trajectory& b);
Trajectory operator*(double s, Trajectory a);

/// Throws ShapeError unless the trajectory matches the config's grid and time nodes.
void require_matches(const Trajectory& traj, const SolverConfig& config, const char* what);

}  // namespace sqg
