#include "sqg/trajectory.hpp"

#include <cmath>
#include <sstream>

#include "sqg/error.hpp"

namespace sqg {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

SolverConfig::SolverConfig(const Grid2D& grid, const SolverParams& params)
    : params_(params),
      grid_(grid),
      time_(params.T, params.n_time),
      q_(make_exponent(time_, params.q)),
      p_bar_(make_exponent(grid, params.p_bar)) {
  const double a = params.alpha;
  if (!(a > 1.0 && a <= 2.0)) throw ConfigError("alpha must lie in (1, 2], got " + fmt(a));
  if (params.mu != 1.0) throw ConfigError("dissipation coefficient mu is fixed to 1");
  if (params.n_time < 8) throw ConfigError("n_time must be >= 8, got " + std::to_string(params.n_time));
  if (!(params.picard_tol > 0.0)) throw ConfigError("picard_tol must be positive");
  if (params.picard_max_iter < 1) throw ConfigError("picard_max_iter must be >= 1");
  const double p_crit = 2.0 / (a - 1.0);
  if (!(params.p > p_crit) || !std::isfinite(params.p)) {
    throw ConfigError("p > 2/(alpha-1) violated: p = " + fmt(params.p) + ", 2/(alpha-1) = " +
                      fmt(p_crit));
  }
  if (!(q_.p_minus() > 2.0)) {
    const std::string msg = "q- > 2 violated: q- = " + fmt(q_.p_minus());
    if (!params.relax_q_minus) throw ConfigError(msg);
    notes_.push_back(msg + " (relaxed)");
  }
  for (int i = 0; i < time_.n_nodes(); ++i) {
    const double lhs = a / q_[i] + 2.0 / params.p;
    if (!(lhs < a - 1.0)) {
      throw ConfigError("alpha/q + 2/p < alpha-1 violated at t=" + fmt(time_.node(i)) + ": " +
                        fmt(lhs) + " >= " + fmt(a - 1.0));
    }
  }
  if (!(params.p <= p_bar_.p_minus() * (1.0 + 1e-12))) {
    throw ConfigError("p_bar must satisfy p <= p_bar-: p = " + fmt(params.p) + ", p_bar- = " +
                      fmt(p_bar_.p_minus()));
  }
}

SolverConfig SolverConfig::with_final_time(double T) const {
  SolverParams p = params_;
  p.T = T;
  return SolverConfig(grid_, p);
}

SolverConfig SolverConfig::with_grid(const Grid2D& grid) const { return SolverConfig(grid, params_); }

SolverConfig SolverConfig::with_n_time(int n_time) const {
  SolverParams p = params_;
  p.n_time = n_time;
  return SolverConfig(grid_, p);
}

double SolverConfig::time_factor() const {
  const double T = params_.T;
  return std::max(std::pow(T, 1.0 / q_.p_minus()), std::pow(T, 1.0 / q_.p_plus()));
}

Trajectory::Trajectory(const Grid2D& grid, const TimeGrid& time)
    : time_(time), nodes_(time.n_nodes(), ScalarField(grid)) {}

Trajectory::Trajectory(const TimeGrid& time, std::vector<ScalarField> nodes)
    : time_(time), nodes_(std::move(nodes)) {
  if (nodes_.size() != static_cast<std::size_t>(time.n_nodes())) {
    throw ShapeError("trajectory has " + std::to_string(nodes_.size()) + " fields for " +
                     std::to_string(time.n_nodes()) + " time nodes");
  }
  for (const ScalarField& f : nodes_) require_same_grid(f.grid(), nodes_.front().grid(), "trajectory");
}

Trajectory Trajectory::constant(const ScalarField& f, const TimeGrid& time) {
  return Trajectory(time, std::vector<ScalarField>(time.n_nodes(), f));
}

bool Trajectory::is_zero() const {
  for (const ScalarField& f : nodes_) {
    if (f.max_abs() != 0.0) return false;
  }
  return true;
}

bool Trajectory::all_mean_zero() const {
  for (const ScalarField& f : nodes_) {
    if (!f.is_mean_zero()) return false;
  }
  return true;
}

Trajectory& Trajectory::operator+=(const Trajectory& other) {
  if (time_ != other.time_) throw ShapeError("trajectory addition: time grids differ");
  for (std::size_t i = 0; i < nodes_.size(); ++i) nodes_[i] += other.nodes_[i];
  return *this;
}

Trajectory& Trajectory::operator-=(const Trajectory& other) {
  if (time_ != other.time_) throw ShapeError("trajectory subtraction: time grids differ");
  for (std::size_t i = 0; i < nodes_.size(); ++i) nodes_[i] -= other.nodes_[i];
  return *this;
}

Trajectory& Trajectory::operator*=(double s) {
  for (ScalarField& f : nodes_) f *= s;
  return *this;
}

Trajectory operator+(Trajectory a, const Trajectory& b) { return a += b; }
Trajectory operator-(Trajectory a, const Trajectory& b) { return a -= b; }
Trajectory operator*(double s, Trajectory a) { return a *= s; }

void require_matches(const Trajectory& traj, const SolverConfig& config, const char* what) {
  if (traj.time() != config.time()) {
    throw ShapeError(std::string(what) + ": trajectory time nodes do not match the configuration");
  }
  require_same_grid(traj.grid(), config.grid(), what);
}

}  // namespace sqg
