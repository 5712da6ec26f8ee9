#include "sqg/spectral_ops.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "sqg/error.hpp"

namespace sqg {

namespace {

void require_axis(int axis) {
  if (axis != 1 && axis != 2) throw DomainError("axis must be 1 or 2, got " + std::to_string(axis));
}

void require_mean_zero(const ScalarField& f, const char* what) {
  if (!f.is_mean_zero()) {
    throw DomainError(std::string(what) + " is undefined on fields with nonzero mean");
  }
}

}  // namespace

void fractional_laplacian_inplace(SpectralField& F, double nu) {
  if (nu == 0.0) return;
  apply_multiplier(F, [nu](int k1, int k2, double xi1, double xi2) -> Complex {
    if (k1 == 0 && k2 == 0) return 0.0;
    return std::pow(std::hypot(xi1, xi2), nu);
  });
}

ScalarField fractional_laplacian(const ScalarField& f, double nu) {
  if (!std::isfinite(nu)) throw DomainError("fractional_laplacian: order must be finite");
  if (nu < 0.0) require_mean_zero(f, "negative-order fractional Laplacian");
  SpectralField F = to_spectral(f);
  fractional_laplacian_inplace(F, nu);
  return from_spectral(F);
}

void riesz_transform_inplace(SpectralField& F, int axis) {
  require_axis(axis);
  const int nyq = F.grid().nyquist_mode();
  apply_multiplier(F, [axis, nyq](int k1, int k2, double xi1, double xi2) -> Complex {
    const int kj = axis == 1 ? k1 : k2;
    if ((k1 == 0 && k2 == 0) || kj == nyq) return 0.0;
    const double xij = axis == 1 ? xi1 : xi2;
    return Complex(0.0, xij / std::hypot(xi1, xi2));
  });
}

ScalarField riesz_transform(const ScalarField& f, int axis) {
  require_axis(axis);
  require_mean_zero(f, "Riesz transform");
  SpectralField F = to_spectral(f);
  riesz_transform_inplace(F, axis);
  return from_spectral(F);
}

SpectralVector velocity_from_theta(const SpectralField& theta) {
  SpectralField u1 = theta;
  riesz_transform_inplace(u1, 2);
  u1 *= -1.0;
  SpectralField u2 = theta;
  riesz_transform_inplace(u2, 1);
  return {std::move(u1), std::move(u2)};
}

VectorField velocity_from_theta(const ScalarField& theta) {
  require_mean_zero(theta, "velocity law");
  SpectralVector u = velocity_from_theta(to_spectral(theta));
  return {from_spectral(u[0]), from_spectral(u[1])};
}

void partial_derivative_inplace(SpectralField& F, int axis) {
  require_axis(axis);
  const int nyq = F.grid().nyquist_mode();
  apply_multiplier(F, [axis, nyq](int k1, int k2, double xi1, double xi2) -> Complex {
    const int kj = axis == 1 ? k1 : k2;
    if (kj == nyq) return 0.0;
    return Complex(0.0, axis == 1 ? xi1 : xi2);
  });
}

ScalarField partial_derivative(const ScalarField& f, int axis) {
  SpectralField F = to_spectral(f);
  partial_derivative_inplace(F, axis);
  return from_spectral(F);
}

void dealias_inplace(SpectralField& F) {
  const int cut = F.grid().dealias_cutoff();
  apply_multiplier(F, [cut](int k1, int k2, double, double) -> Complex {
    return (std::abs(k1) > cut || std::abs(k2) > cut) ? 0.0 : 1.0;
  });
}

SpectralField spectral_product(const SpectralField& a, const SpectralField& b, bool dealias) {
  require_same_grid(a.grid(), b.grid(), "spectral_product");
  SpectralField A = a;
  SpectralField B = b;
  if (dealias) {
    dealias_inplace(A);
    dealias_inplace(B);
  }
  SpectralField P = to_spectral(multiply(from_spectral(A), from_spectral(B)));
  if (dealias) dealias_inplace(P);
  return P;
}

ScalarField nonlinear_term(const VectorField& u, const ScalarField& theta, bool dealias) {
  require_same_grid(u[0].grid(), theta.grid(), "nonlinear_term");
  require_same_grid(u[1].grid(), theta.grid(), "nonlinear_term");
  const SpectralField T = to_spectral(theta);
  SpectralField result(theta.grid());
  for (int axis = 1; axis <= 2; ++axis) {
    SpectralField dT = T;
    partial_derivative_inplace(dT, axis);
    result += spectral_product(to_spectral(u[axis - 1]), dT, dealias);
  }
  return from_spectral(result);
}

ScalarField divergence(const VectorField& u) {
  require_same_grid(u[0].grid(), u[1].grid(), "divergence");
  SpectralField d1 = to_spectral(u[0]);
  partial_derivative_inplace(d1, 1);
  SpectralField d2 = to_spectral(u[1]);
  partial_derivative_inplace(d2, 2);
  d1 += d2;
  return from_spectral(d1);
}

double spectral_divergence_max(const SpectralVector& u) {
  SpectralField d1 = u[0];
  partial_derivative_inplace(d1, 1);
  SpectralField d2 = u[1];
  partial_derivative_inplace(d2, 2);
  d1 += d2;
  return d1.max_abs();
}

}  // namespace sqg
