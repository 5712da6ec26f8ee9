#pragma once

#include <string>
#include <vector>

#include "sqg/mild.hpp"

namespace sqg {

/// Multi-index (g1, g2) with total order at most max_order.
struct MultiIndex {
  static constexpr int kDefaultMaxOrder = 3;

  int g1 = 0;
  int g2 = 0;

  MultiIndex() = default;
  /// Throws ConfigError for negative entries or total above max_order.
  MultiIndex(int g1, int g2, int max_order = kDefaultMaxOrder);

  int total() const { return g1 + g2; }
  std::string to_string() const;
  bool operator==(const MultiIndex&) const = default;
};

/// Every gamma with |gamma| <= |beta|, ordered by total then by g1 descending.
std::vector<MultiIndex> indices_up_to(const MultiIndex& beta);

/// Multiplier (i xi1)^g1 (i xi2)^g2. For odd orders the Nyquist mode of that
/// axis is zeroed, as for first derivatives.
ScalarField spectral_derivative(const ScalarField& f, const MultiIndex& gamma);
void spectral_derivative_inplace(SpectralField& F, const MultiIndex& gamma);
Trajectory spectral_derivative(const Trajectory& traj, const MultiIndex& gamma);

struct DerivativeRow {
  MultiIndex gamma;
  double direct_norm = 0.0;       // ||D^gamma theta||_X from the converged trajectory
  double fixed_point_norm = 0.0;  // ||X_gamma||_X from the derivative fixed point
  double eta = 0.0;               // ||linear part with data (D^gamma theta0, D^gamma f)||_X
  double distance = 0.0;          // ||D^gamma theta - X_gamma||_X
  int iterations = 0;
  bool converged = false;
  bool finite() const;
  /// direct_norm <= 2 eta (1 + 1e-6) + tolerance
  bool bounded = false;
};

struct RegularityReport {
  std::vector<DerivativeRow> rows;
  bool all_finite() const;
  bool all_bounded() const;
  double max_distance() const;
};

/// For every gamma with |gamma| <= |beta| compares the nodewise derivative of
/// the converged solution with the solution of the differentiated mild
/// equation, in which theta is frozen and lower-order derivatives enter
/// through the Leibniz rule:
///   X = L_gamma - B(X, theta) - B(theta, X) - sum_{0<delta<gamma} C(gamma,delta) B(X_delta, X_{gamma-delta}).
/// Throws PreconditionError unless the Picard result converged.
RegularityReport regularity_report(const PicardResult& solved, const ScalarField& theta0,
                                   const MultiIndex& beta, const Trajectory& forcing,
                                   const SolverConfig& config);

}  // namespace sqg
