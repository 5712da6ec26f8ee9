#pragma once

#include <cstdint>

#include "sqg/field.hpp"

namespace sqg {

enum class ModeKind { cosine, sine };

/// amplitude * cos or sin of (k1 x1 + k2 x2) 2pi/L.
ScalarField single_mode(const Grid2D& grid, int k1, int k2, ModeKind kind, double amplitude = 1.0);

/// amplitude * exp(-|x - c|^2 / (2 width^2)), Euclidean distance inside the box
/// (no periodic images). Not mean-zero.
ScalarField gaussian_bump(const Grid2D& grid, double c1, double c2, double width,
                          double amplitude = 1.0);
ScalarField centered_gaussian(const Grid2D& grid, double width, double amplitude = 1.0);

/// exp(-r^2/(2 w^2)) - exp(-r^2/(8 w^2)) / 4 around the box center, which has
/// zero integral over the plane. The residual grid mean is removed so the
/// result is exactly mean-zero on the torus.
ScalarField difference_of_gaussians(const Grid2D& grid, double width, double amplitude = 1.0);

/// Random real trigonometric polynomial with modes 0 < max(|k1|,|k2|) <= band,
/// scaled to max-abs = amplitude. Mean-zero; deterministic in the seed.
ScalarField random_bandlimited(const Grid2D& grid, std::uint64_t seed, int band,
                               double amplitude = 1.0);

/// Subtracts the grid mean.
ScalarField project_mean(ScalarField f);

}  // namespace sqg
