#pragma once

#include <array>
#include <numbers>

#include "sqg/field.hpp"

namespace sqg {

/// Velocity pair (u1, u2).
using VectorField = std::array<ScalarField, 2>;
using SpectralVector = std::array<SpectralField, 2>;

/// Applies m(xi1, xi2) mode-wise. The multiplier must satisfy
/// m(-xi) = conj(m(xi)) so the result stays the transform of a real field.
template <class Multiplier>
void apply_multiplier(SpectralField& F, Multiplier&& m) {
  const Grid2D& g = F.grid();
  const int n = g.n_points();
  const int cols = g.spectral_columns();
  const double base = 2.0 * std::numbers::pi / g.box_side();
  for (int i1 = 0; i1 < n; ++i1) {
    const int k1 = g.mode(i1);
    const double xi1 = g.wavenumber(i1);
    for (int i2 = 0; i2 < cols; ++i2) {
      // Column N/2 holds the Nyquist mode, whose signed value is -N/2.
      const int k2 = i2 == n / 2 ? -n / 2 : i2;
      F.at(i1, i2) *= m(k1, k2, xi1, base * k2);
    }
  }
}

/// Lambda^nu = |xi|^nu. The zero mode is kept for nu == 0 and zeroed for nu > 0.
/// Negative nu requires a mean-zero field (DomainError otherwise).
ScalarField fractional_laplacian(const ScalarField& f, double nu);
void fractional_laplacian_inplace(SpectralField& F, double nu);

/// Riesz transform with symbol i xi_j / |xi|, axis in {1, 2}.
/// Requires a mean-zero field; the Nyquist mode of axis j is zeroed.
ScalarField riesz_transform(const ScalarField& f, int axis);
void riesz_transform_inplace(SpectralField& F, int axis);

/// u = (-R2 theta, R1 theta).
VectorField velocity_from_theta(const ScalarField& theta);
SpectralVector velocity_from_theta(const SpectralField& theta);

/// Multiplies by i xi_j (axis in {1, 2}); Nyquist mode of axis j zeroed.
void partial_derivative_inplace(SpectralField& F, int axis);
ScalarField partial_derivative(const ScalarField& f, int axis);

/// Zeroes every mode with |k1| or |k2| above the 2/3-rule cutoff.
void dealias_inplace(SpectralField& F);

/// u . grad(theta) evaluated pseudo-spectrally. With dealias set, both factors
/// are truncated before the physical-space product and the product is
/// truncated again.
ScalarField nonlinear_term(const VectorField& u, const ScalarField& theta, bool dealias);

/// d1 u1 + d2 u2 with spectral derivatives.
ScalarField divergence(const VectorField& u);

/// Max-abs of i xi1 u1_hat + i xi2 u2_hat over all modes.
double spectral_divergence_max(const SpectralVector& u);

/// Spectral transform of the product of two fields given spectrally, with
/// the 2/3 rule applied to both factors and to the product when requested.
SpectralField spectral_product(const SpectralField& a, const SpectralField& b, bool dealias);

}  // namespace sqg
