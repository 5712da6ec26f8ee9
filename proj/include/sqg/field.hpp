#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sqg/grid.hpp"

namespace sqg {

using Complex = std::complex<double>;

/// Real scalar field sampled on a Grid2D, row-major with x1 as the slow index.
class ScalarField {
 public:
  explicit ScalarField(Grid2D grid);
  /// Throws ShapeError on size mismatch and DataError on non-finite values.
  ScalarField(Grid2D grid, std::vector<double> values);

  const Grid2D& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::size_t size() const { return values_.size(); }

  double& at(int i1, int i2) { return values_[index(i1, i2)]; }
  double at(int i1, int i2) const { return values_[index(i1, i2)]; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  double max_abs() const;
  double mean() const;
  /// Grid mean at most 1e-13 relative to the max-abs value (true for zero fields).
  bool is_mean_zero(double rel_tol = 1e-13) const;
  bool all_finite() const;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s);

 private:
  std::size_t index(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * grid_.n_points() + i2;
  }

  Grid2D grid_;
  std::vector<double> values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
/// Pointwise product.
ScalarField multiply(const ScalarField& a, const ScalarField& b);
double max_abs_difference(const ScalarField& a, const ScalarField& b);

/// Fourier coefficients of a real field on the half-spectrum k2 >= 0.
///
/// Coefficients are normalized per mode: f(x) = sum_k c_k exp(i k . x 2pi/L),
/// so cos(x1) on a 2pi box has c_(+-1,0) = 1/2. Negative k2 follow from
/// Hermitian symmetry c_(-k) = conj(c_k).
class SpectralField {
 public:
  explicit SpectralField(Grid2D grid);
  SpectralField(Grid2D grid, std::vector<Complex> coeffs);

  const Grid2D& grid() const { return grid_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }

  /// Storage access by FFT index (i1 in [0,N), i2 in [0,N/2]).
  Complex& at(int i1, int i2) { return coeffs_[index(i1, i2)]; }
  Complex at(int i1, int i2) const { return coeffs_[index(i1, i2)]; }

  /// Coefficient of signed mode (k1, k2), using Hermitian symmetry for k2 < 0.
  Complex coeff(int k1, int k2) const;

  double max_abs() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s);
  /// this += s * other
  SpectralField& add_scaled(double s, const SpectralField& other);

 private:
  std::size_t index(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * grid_.spectral_columns() + i2;
  }

  Grid2D grid_;
  std::vector<Complex> coeffs_;
};

SpectralField to_spectral(const ScalarField& f);
ScalarField from_spectral(const SpectralField& F);

}  // namespace sqg
