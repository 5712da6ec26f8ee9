#pragma once

#include "sqg/field.hpp"

namespace sqg {

/// lambda^(alpha-1) theta0(lambda (x - c) + c) about the box center c, taken
/// exactly on the lattice: grid index c + lambda (i - c) when it lies inside
/// the box, zero otherwise. Requires an integer lambda >= 1.
ScalarField rescale_data(const ScalarField& theta0, int lambda, double alpha);

struct ScalingReport {
  int lambda = 1;
  double alpha = 0.0;
  double critical_exponent = 0.0;  // 2 / (alpha - 1)
  double critical_ratio = 0.0;     // continuum value 1
  double contrast_exponent = 0.0;
  double contrast_ratio = 0.0;
  double contrast_expected = 0.0;  // lambda^(alpha - 1 - 2/p)
};

/// Norm ratios ||theta_lambda|| / ||theta0|| for the critical exponent and
/// for a contrast exponent. Throws DomainError for alpha outside (1, 2], for
/// lambda < 1, or when the critical exponent exceeds 64.
ScalingReport scaling_check(const ScalarField& theta0, int lambda, double alpha,
                            double contrast_p = 2.0);

}  // namespace sqg
