#include "sqg/scaling.hpp"

#include <cmath>

#include "sqg/error.hpp"
#include "sqg/lebesgue.hpp"

namespace sqg {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw DomainError("scaling: alpha must lie in (1, 2]");
  if (2.0 / (alpha - 1.0) > 64.0) {
    throw DomainError("scaling: critical exponent 2/(alpha-1) above 64, quadrature unreliable");
  }
}

}  // namespace

ScalarField rescale_data(const ScalarField& theta0, int lambda, double alpha) {
  require_alpha(alpha);
  if (lambda < 1) throw DomainError("scaling: lambda must be a positive integer");
  const Grid2D& g = theta0.grid();
  const int n = g.n_points();
  const int c = n / 2;
  const double amp = std::pow(static_cast<double>(lambda), alpha - 1.0);
  ScalarField out(g);
  for (int i1 = 0; i1 < n; ++i1) {
    const long j1 = c + static_cast<long>(lambda) * (i1 - c);
    if (j1 < 0 || j1 >= n) continue;
    for (int i2 = 0; i2 < n; ++i2) {
      const long j2 = c + static_cast<long>(lambda) * (i2 - c);
      if (j2 < 0 || j2 >= n) continue;
      out.at(i1, i2) = amp * theta0.at(static_cast<int>(j1), static_cast<int>(j2));
    }
  }
  return out;
}

ScalingReport scaling_check(const ScalarField& theta0, int lambda, double alpha,
                            double contrast_p) {
  require_alpha(alpha);
  if (!(contrast_p >= 1.0)) throw DomainError("scaling: contrast exponent must be >= 1");
  ScalingReport r;
  r.lambda = lambda;
  r.alpha = alpha;
  r.critical_exponent = 2.0 / (alpha - 1.0);
  r.contrast_exponent = contrast_p;
  r.contrast_expected = std::pow(static_cast<double>(lambda), alpha - 1.0 - 2.0 / contrast_p);
  const ScalarField scaled = rescale_data(theta0, lambda, alpha);
  const double base_c = classical_lp_norm(theta0, r.critical_exponent);
  const double base_p = classical_lp_norm(theta0, contrast_p);
  if (base_c == 0.0) throw DomainError("scaling: zero data");
  r.critical_ratio = classical_lp_norm(scaled, r.critical_exponent) / base_c;
  r.contrast_ratio = classical_lp_norm(scaled, contrast_p) / base_p;
  return r;
}

}  // namespace sqg
