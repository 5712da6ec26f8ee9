#pragma once

#include <memory>
#include <vector>

namespace sqg {

namespace detail {
class FftPlan;
}

/// Periodic N x N discretization of a square box of side L.
///
/// Point (i1, i2) sits at x = (i1 * h, i2 * h), h = L / N. Fourier modes use
/// the usual FFT ordering: index i maps to the signed integer mode
/// k = i for i < N/2 and k = i - N for i >= N/2, so the Nyquist mode is -N/2.
/// Spectral arrays are stored as N x (N/2 + 1) half-spectra (k2 >= 0).
class Grid2D {
 public:
  /// Throws ConfigError unless n_points is a power of two >= 8 and box_side > 0.
  Grid2D(int n_points, double box_side);

  int n_points() const { return n_; }
  double box_side() const { return side_; }
  double spacing() const { return side_ / n_; }
  double cell_area() const { return spacing() * spacing(); }
  double area() const { return side_ * side_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  /// Number of k2 columns in the half-spectrum.
  int spectral_columns() const { return n_ / 2 + 1; }
  std::size_t spectral_size() const { return static_cast<std::size_t>(n_) * spectral_columns(); }

  /// Signed integer mode of FFT index i.
  int mode(int index) const { return index < n_ / 2 ? index : index - n_; }
  int nyquist_mode() const { return -n_ / 2; }

  /// Physical wavenumber 2 pi k / L of FFT index i.
  double wavenumber(int index) const { return wavenumbers_[index]; }
  const std::vector<double>& wavenumbers() const { return wavenumbers_; }

  double coordinate(int index) const { return index * spacing(); }
  /// Box center, the stand-in origin for radial quantities.
  double center() const { return 0.5 * side_; }

  /// Largest |k| kept by the 2/3 truncation rule.
  int dealias_cutoff() const { return (n_ - 1) / 3; }

  bool operator==(const Grid2D& other) const { return n_ == other.n_ && side_ == other.side_; }
  bool operator!=(const Grid2D& other) const { return !(*this == other); }

  const detail::FftPlan& fft() const { return *plan_; }

 private:
  int n_;
  double side_;
  std::vector<double> wavenumbers_;
  std::shared_ptr<const detail::FftPlan> plan_;
};

Grid2D make_grid(int n_points, double box_side);

/// Throws ShapeError when the two grids differ.
void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what);

}  // namespace sqg
