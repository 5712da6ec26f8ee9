#include "sqg/riesz_potential.hpp"

#include <cmath>
#include <string>

#include "sqg/error.hpp"
#include "sqg/spectral_ops.hpp"

namespace sqg {

ScalarField riesz_potential_2d(const ScalarField& f, double beta) {
  if (!(beta > 0.0 && beta < 2.0)) {
    throw DomainError("Riesz potential order must lie in (0, 2), got " + std::to_string(beta));
  }
  if (!f.is_mean_zero()) throw DomainError("Riesz potential is undefined on fields with nonzero mean");
  SpectralField F = to_spectral(f);
  fractional_laplacian_inplace(F, -beta);
  return from_spectral(F);
}

namespace {

// int_a^b |t - s|^(beta - 1) dt for a <= b.
double power_cell_integral(double a, double b, double s, double beta) {
  if (s <= a) return (std::pow(b - s, beta) - std::pow(a - s, beta)) / beta;
  if (s >= b) return (std::pow(s - a, beta) - std::pow(s - b, beta)) / beta;
  return (std::pow(s - a, beta) + std::pow(b - s, beta)) / beta;
}

}  // namespace

std::vector<double> riesz_potential_1d(const std::vector<double>& psi, const TimeGrid& time,
                                       double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("1D Riesz potential order must lie in (0, 1), got " + std::to_string(beta));
  }
  if (psi.size() != static_cast<std::size_t>(time.n_nodes())) {
    throw ShapeError("riesz_potential_1d: series length does not match the time grid");
  }
  const int n = time.n_nodes();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double s = time.node(i);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      if (psi[j] == 0.0) continue;
      const auto [a, b] = time.cell(j);
      acc += std::abs(psi[j]) * power_cell_integral(a, b, s, beta);
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace sqg
