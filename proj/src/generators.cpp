#include "sqg/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sqg/error.hpp"

namespace sqg {

namespace {
// Portable uniform draw in [-1, 1) from the raw engine output.
double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
}
}  // namespace

ScalarField single_mode(const Grid2D& grid, int k1, int k2, ModeKind kind, double amplitude) {
  ScalarField f(grid);
  const int n = grid.n_points();
  const double base = 2.0 * std::numbers::pi / grid.box_side();
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const double phase = base * (k1 * grid.coordinate(i1) + k2 * grid.coordinate(i2));
      f.at(i1, i2) = amplitude * (kind == ModeKind::cosine ? std::cos(phase) : std::sin(phase));
    }
  }
  return f;
}

ScalarField gaussian_bump(const Grid2D& grid, double c1, double c2, double width,
                          double amplitude) {
  if (!(width > 0.0)) throw DomainError("gaussian_bump: width must be positive");
  ScalarField f(grid);
  const int n = grid.n_points();
  const double inv = 1.0 / (2.0 * width * width);
  for (int i1 = 0; i1 < n; ++i1) {
    const double d1 = grid.coordinate(i1) - c1;
    for (int i2 = 0; i2 < n; ++i2) {
      const double d2 = grid.coordinate(i2) - c2;
      f.at(i1, i2) = amplitude * std::exp(-(d1 * d1 + d2 * d2) * inv);
    }
  }
  return f;
}

ScalarField centered_gaussian(const Grid2D& grid, double width, double amplitude) {
  return gaussian_bump(grid, grid.center(), grid.center(), width, amplitude);
}

ScalarField difference_of_gaussians(const Grid2D& grid, double width, double amplitude) {
  ScalarField f = centered_gaussian(grid, width, amplitude);
  f -= centered_gaussian(grid, 2.0 * width, 0.25 * amplitude);
  return project_mean(std::move(f));
}

ScalarField random_bandlimited(const Grid2D& grid, std::uint64_t seed, int band, double amplitude) {
  const int n = grid.n_points();
  if (band < 1 || band >= n / 2) {
    throw DomainError("random_bandlimited: band must lie in [1, N/2)");
  }
  std::mt19937_64 rng(seed);
  SpectralField F(grid);
  // Fill the upper half plane (k2 > 0, or k2 == 0 and k1 > 0) and mirror the k2 == 0 column.
  for (int k1 = -band; k1 <= band; ++k1) {
    for (int k2 = 0; k2 <= band; ++k2) {
      if (k2 == 0 && k1 <= 0) continue;
      const Complex c(uniform_pm1(rng), uniform_pm1(rng));
      const int i1 = (k1 + n) % n;
      F.at(i1, k2) = c;
      if (k2 == 0) F.at((n - k1) % n, 0) = std::conj(c);
    }
  }
  ScalarField f = from_spectral(F);
  const double m = f.max_abs();
  if (m > 0.0) f *= amplitude / m;
  return f;
}

ScalarField project_mean(ScalarField f) {
  const double m = f.mean();
  for (double& v : f.values()) v -= m;
  return f;
}

}  // namespace sqg
