#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sqg/exponent.hpp"
#include "sqg/field.hpp"
#include "sqg/generators.hpp"

namespace sqg::testing {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Hand-rolled generator for property loops: seeded draws of fields,
/// amplitudes and exponent parameters.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % (hi - lo + 1)); }
  std::uint64_t seed() { return rng_(); }

  /// Mean-zero band-limited field with random band and amplitude.
  ScalarField field(const Grid2D& g, int max_band = 8) {
    const int band = integer(1, max_band);
    return random_bandlimited(g, seed(), band, uniform(0.1, 10.0));
  }

  /// Spatial exponent with 1 < p- <= p+ < infinity from a random analytic family.
  Exponent exponent(const Grid2D& g) {
    const double base = uniform(1.3, 4.0);
    const double amp = uniform(0.0, 2.0);
    switch (integer(0, 3)) {
      case 0:
        return make_exponent(g, ExponentFamily{"logdrift", {{"base", base}, {"amp", amp}}});
      case 1:
        return make_exponent(
            g, ExponentFamily{"bump", {{"base", base}, {"amp", amp}, {"width", g.box_side() / 6}}});
      case 2:
        return make_exponent(g, ExponentFamily{"wave", {{"base", base + 0.5}, {"amp", 0.5}, {"k", 1}}});
      default:
        return Exponent::constant(g, base);
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel_max_error(const ScalarField& a, const ScalarField& b) {
  const double scale = std::max(a.max_abs(), b.max_abs());
  return scale == 0.0 ? 0.0 : max_abs_difference(a, b) / scale;
}

template <class Fn>
ScalarField sample(const Grid2D& g, Fn fn) {
  ScalarField f(g);
  for (int i = 0; i < g.n_points(); ++i) {
    for (int j = 0; j < g.n_points(); ++j) f.at(i, j) = fn(g.coordinate(i), g.coordinate(j));
  }
  return f;
}

}  // namespace sqg::testing
