#include "sqg/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft_plan.hpp"
#include "sqg/error.hpp"

namespace sqg {

ScalarField::ScalarField(Grid2D grid) : grid_(std::move(grid)), values_(grid_.size(), 0.0) {}

ScalarField::ScalarField(Grid2D grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw ShapeError("field has " + std::to_string(values_.size()) + " values, grid needs " +
                     std::to_string(grid_.size()));
  }
  if (!all_finite()) throw DataError("field contains NaN or Inf");
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double ScalarField::mean() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

bool ScalarField::is_mean_zero(double rel_tol) const {
  const double scale = max_abs();
  if (scale == 0.0) return true;
  return std::abs(mean()) <= rel_tol * scale;
}

bool ScalarField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "field addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "field subtraction");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "pointwise product");
  ScalarField out(a.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

double max_abs_difference(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "field difference");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SpectralField::SpectralField(Grid2D grid)
    : grid_(std::move(grid)), coeffs_(grid_.spectral_size(), Complex(0.0, 0.0)) {}

SpectralField::SpectralField(Grid2D grid, std::vector<Complex> coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != grid_.spectral_size()) {
    throw ShapeError("spectral field has " + std::to_string(coeffs_.size()) +
                     " coefficients, grid needs " + std::to_string(grid_.spectral_size()));
  }
}

Complex SpectralField::coeff(int k1, int k2) const {
  const int n = grid_.n_points();
  auto wrap = [n](int k) { return ((k % n) + n) % n; };
  // k2 = -N/2 and +N/2 share the stored Nyquist column.
  int j2 = wrap(k2);
  if (j2 <= n / 2) return at(wrap(k1), j2);
  return std::conj(at(wrap(-k1), wrap(-k2)));
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "spectral addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "spectral subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (Complex& c : coeffs_) c *= s;
  return *this;
}

SpectralField& SpectralField::add_scaled(double s, const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "spectral axpy");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * other.coeffs_[i];
  return *this;
}

SpectralField to_spectral(const ScalarField& f) {
  const Grid2D& g = f.grid();
  if (f.size() != g.size()) throw ShapeError("to_spectral: field size does not match grid");
  SpectralField out(g);
  g.fft().forward(f.values().data(), out.coeffs().data());
  const double norm = 1.0 / static_cast<double>(g.size());
  for (Complex& c : out.coeffs()) c *= norm;
  return out;
}

ScalarField from_spectral(const SpectralField& F) {
  const Grid2D& g = F.grid();
  if (F.coeffs().size() != g.spectral_size()) {
    throw ShapeError("from_spectral: coefficient count does not match grid");
  }
  std::vector<double> values(g.size());
  g.fft().inverse(F.coeffs().data(), values.data());
  return ScalarField(g, std::move(values));
}

}  // namespace sqg
