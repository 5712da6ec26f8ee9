#pragma once

#include <fftw3.h>

#include "sqg/field.hpp"

namespace sqg::detail {

/// Forward and inverse 2D real FFT plans for one grid size.
///
/// Plans are created once per Grid2D (shared between copies) and executed
/// through the new-array interface on freshly allocated, FFTW-aligned
/// buffers, which keeps execution thread-safe and bit-reproducible.
class FftPlan {
 public:
  explicit FftPlan(int n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  /// Unnormalized r2c transform.
  void forward(const double* in, Complex* out) const;
  /// Unnormalized c2r transform; the input is not modified.
  void inverse(const Complex* in, double* out) const;

 private:
  int n_;
  fftw_plan forward_;
  fftw_plan inverse_;
};

}  // namespace sqg::detail
