#include "sqg/maximal.hpp"

#include <algorithm>
#include <cmath>

namespace sqg {

std::vector<int> maximal_half_widths(const Grid2D& grid) {
  std::vector<int> m{0};
  for (int w = 1; w <= grid.n_points() / 4; w *= 2) m.push_back(w);
  return m;
}

namespace {

// Periodic running sums of width 2m+1 along each row, then each column.
std::vector<double> box_sum(const std::vector<double>& a, int n, int m) {
  std::vector<double> rows(a.size());
  for (int i1 = 0; i1 < n; ++i1) {
    const double* row = &a[static_cast<std::size_t>(i1) * n];
    double s = 0.0;
    for (int d = -m; d <= m; ++d) s += row[(d + n) % n];
    for (int i2 = 0; i2 < n; ++i2) {
      rows[static_cast<std::size_t>(i1) * n + i2] = s;
      s += row[(i2 + m + 1) % n] - row[(i2 - m + n) % n];
    }
  }
  std::vector<double> out(a.size());
  for (int i2 = 0; i2 < n; ++i2) {
    double s = 0.0;
    for (int d = -m; d <= m; ++d) s += rows[static_cast<std::size_t>((d + n) % n) * n + i2];
    for (int i1 = 0; i1 < n; ++i1) {
      out[static_cast<std::size_t>(i1) * n + i2] = s;
      s += rows[static_cast<std::size_t>((i1 + m + 1) % n) * n + i2] -
           rows[static_cast<std::size_t>((i1 - m + n) % n) * n + i2];
    }
  }
  return out;
}

}  // namespace

ScalarField maximal_function(const ScalarField& f) {
  const int n = f.grid().n_points();
  std::vector<double> a(f.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(f[i]);
  std::vector<double> best = a;
  for (int m : maximal_half_widths(f.grid())) {
    if (m == 0) continue;
    const std::vector<double> s = box_sum(a, n, m);
    const double inv = 1.0 / ((2.0 * m + 1.0) * (2.0 * m + 1.0));
    for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], s[i] * inv);
  }
  return ScalarField(f.grid(), std::move(best));
}

}  // namespace sqg
