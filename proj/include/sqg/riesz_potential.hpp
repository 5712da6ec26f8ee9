#pragma once

#include <vector>

#include "sqg/exponent.hpp"
#include "sqg/field.hpp"

namespace sqg {

/// Periodic Riesz potential Lambda^{-beta}: multiplier |xi|^{-beta}, zero mode
/// dropped. Requires 0 < beta < 2 and a mean-zero field (DomainError).
ScalarField riesz_potential_2d(const ScalarField& f, double beta);

/// One-dimensional Riesz potential of a time series extended by zero outside
/// [0, T]: at each node s, sum_j |psi_j| int_{cell j} |t - s|^{beta - 1} dt with
/// the cell integrals in closed form. Requires 0 < beta < 1.
std::vector<double> riesz_potential_1d(const std::vector<double>& psi, const TimeGrid& time,
                                       double beta);

}  // namespace sqg
