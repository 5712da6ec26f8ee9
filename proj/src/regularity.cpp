#include "sqg/regularity.hpp"

#include <cmath>
#include <map>

#include "sqg/error.hpp"
#include "sqg/spectral_ops.hpp"

namespace sqg {

namespace {

Complex ipow(double xi, int order) {
  Complex v{1.0, 0.0};
  for (int k = 0; k < order; ++k) v *= Complex{0.0, xi};
  return v;
}

double binomial(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

}  // namespace

MultiIndex::MultiIndex(int a, int b, int max_order) : g1(a), g2(b) {
  if (a < 0 || b < 0) throw ConfigError("multi-index entries must be non-negative");
  if (a + b > max_order) {
    throw ConfigError("multi-index order " + std::to_string(a + b) + " exceeds maximum " +
                      std::to_string(max_order));
  }
}

std::string MultiIndex::to_string() const {
  return "(" + std::to_string(g1) + "," + std::to_string(g2) + ")";
}

std::vector<MultiIndex> indices_up_to(const MultiIndex& beta) {
  std::vector<MultiIndex> out;
  for (int t = 0; t <= beta.total(); ++t) {
    for (int a = t; a >= 0; --a) out.emplace_back(a, t - a, beta.total());
  }
  return out;
}

void spectral_derivative_inplace(SpectralField& F, const MultiIndex& gamma) {
  if (gamma.total() == 0) return;
  const int nyq = F.grid().nyquist_mode();
  apply_multiplier(F, [&](int k1, int k2, double xi1, double xi2) {
    if ((gamma.g1 % 2 == 1 && k1 == nyq) || (gamma.g2 % 2 == 1 && k2 == nyq)) return Complex{};
    return ipow(xi1, gamma.g1) * ipow(xi2, gamma.g2);
  });
}

ScalarField spectral_derivative(const ScalarField& f, const MultiIndex& gamma) {
  if (gamma.total() == 0) return f;
  SpectralField F = to_spectral(f);
  spectral_derivative_inplace(F, gamma);
  return from_spectral(F);
}

Trajectory spectral_derivative(const Trajectory& traj, const MultiIndex& gamma) {
  std::vector<ScalarField> nodes;
  nodes.reserve(traj.size());
  for (const ScalarField& f : traj.nodes()) nodes.push_back(spectral_derivative(f, gamma));
  return Trajectory(traj.time(), std::move(nodes));
}

bool DerivativeRow::finite() const {
  return std::isfinite(direct_norm) && std::isfinite(fixed_point_norm) && std::isfinite(distance);
}

bool RegularityReport::all_finite() const {
  for (const DerivativeRow& r : rows) {
    if (!r.finite()) return false;
  }
  return true;
}

bool RegularityReport::all_bounded() const {
  for (const DerivativeRow& r : rows) {
    if (!r.bounded) return false;
  }
  return true;
}

double RegularityReport::max_distance() const {
  double m = 0.0;
  for (const DerivativeRow& r : rows) m = std::max(m, r.distance);
  return m;
}

RegularityReport regularity_report(const PicardResult& solved, const ScalarField& theta0,
                                   const MultiIndex& beta, const Trajectory& forcing,
                                   const SolverConfig& config) {
  if (!solved.converged || !solved.final_state().trajectory) {
    throw PreconditionError("regularity_report needs a converged Picard result");
  }
  const Trajectory& theta = solved.solution();
  require_matches(theta, config, "regularity_report");
  const double tol = config.params().picard_tol;
  const int max_iter = config.params().picard_max_iter;

  RegularityReport report;
  std::map<std::pair<int, int>, Trajectory> solved_derivs;
  for (const MultiIndex& gamma : indices_up_to(beta)) {
    DerivativeRow row;
    row.gamma = gamma;
    const Trajectory direct = spectral_derivative(theta, gamma);
    const Trajectory lin =
        linear_part(spectral_derivative(theta0, gamma), spectral_derivative(forcing, gamma), config);
    row.eta = xt_norm(lin, config);
    row.direct_norm = xt_norm(direct, config);

    if (gamma.total() == 0) {
      row.fixed_point_norm = row.direct_norm;
      row.converged = true;
      solved_derivs.emplace(std::pair{0, 0}, theta);
    } else {
      // Known part: linear data minus the Leibniz cross terms of lower order.
      Trajectory known = lin;
      for (int d1 = 0; d1 <= gamma.g1; ++d1) {
        for (int d2 = 0; d2 <= gamma.g2; ++d2) {
          const bool trivial = (d1 == 0 && d2 == 0) || (d1 == gamma.g1 && d2 == gamma.g2);
          if (trivial) continue;
          const double c = binomial(gamma.g1, d1) * binomial(gamma.g2, d2);
          const Trajectory& a = solved_derivs.at({d1, d2});
          const Trajectory& b = solved_derivs.at({gamma.g1 - d1, gamma.g2 - d2});
          known -= c * bilinear_B(a, b, config);
        }
      }
      Trajectory x(config.grid(), config.time());
      for (int k = 1; k <= max_iter; ++k) {
        Trajectory next = known;
        if (!x.is_zero()) {
          next -= bilinear_B(x, theta, config);
          next -= bilinear_B(theta, x, config);
        }
        const double norm = xt_norm(next, config);
        const double res = xt_norm(next - x, config);
        x = std::move(next);
        row.iterations = k;
        if (!std::isfinite(norm)) break;
        if (res <= tol * std::max(1.0, norm)) {
          row.converged = true;
          break;
        }
      }
      row.fixed_point_norm = xt_norm(x, config);
      row.distance = xt_norm(direct - x, config);
      solved_derivs.emplace(std::pair{gamma.g1, gamma.g2}, std::move(x));
    }
    row.bounded = row.direct_norm <= 2.0 * row.eta * (1.0 + 1e-6) + tol;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace sqg
