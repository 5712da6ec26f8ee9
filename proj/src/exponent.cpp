#include "sqg/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sqg/error.hpp"

namespace sqg {

TimeGrid::TimeGrid(double T, int n_nodes) : T_(T), n_(n_nodes) {
  if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("final time T must be positive");
  if (n_nodes < 2) throw ConfigError("time grid needs at least two nodes");
}

std::pair<double, double> TimeGrid::cell(int i) const {
  const double h = 0.5 * step();
  const double a = std::max(0.0, node(i) - h);
  const double b = i == n_ - 1 ? T_ : std::min(T_, node(i) + h);
  return {a, b};
}

double TimeGrid::weight(int i) const {
  return (i == 0 || i == n_ - 1) ? 0.5 * step() : step();
}

std::vector<double> TimeGrid::weights() const {
  std::vector<double> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = weight(i);
  return w;
}

Exponent::Exponent(std::variant<Grid2D, TimeGrid> domain, std::vector<double> values,
                   std::vector<double> weights, std::optional<double> p_infinity)
    : domain_(std::move(domain)), values_(std::move(values)), weights_(std::move(weights)) {
  if (values_.empty()) throw ShapeError("exponent has no samples");
  for (double v : values_) {
    if (!std::isfinite(v) || !(v > 1.0)) {
      throw DomainError("exponent samples must be finite and > 1, got " + std::to_string(v));
    }
  }
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  p_minus_ = *lo;
  p_plus_ = *hi;
  if (p_infinity) {
    if (!(*p_infinity > 1.0) || !std::isfinite(*p_infinity)) {
      throw DomainError("exponent limit at infinity must be finite and > 1");
    }
    p_infinity_ = *p_infinity;
  } else if (std::holds_alternative<Grid2D>(domain_)) {
    // Grid point (0, 0) is a box corner, the farthest point from the center.
    p_infinity_ = values_[0];
  } else {
    p_infinity_ = values_.back();
  }
}

Exponent Exponent::spatial(const Grid2D& grid, std::vector<double> values,
                           std::optional<double> p_infinity) {
  if (values.size() != grid.size()) throw ShapeError("spatial exponent size does not match grid");
  std::vector<double> w(grid.size(), grid.cell_area());
  return Exponent(grid, std::move(values), std::move(w), p_infinity);
}

Exponent Exponent::temporal(const TimeGrid& time, std::vector<double> values) {
  if (values.size() != static_cast<std::size_t>(time.n_nodes())) {
    throw ShapeError("temporal exponent size does not match time grid");
  }
  return Exponent(time, std::move(values), time.weights(), std::nullopt);
}

Exponent Exponent::constant(const Grid2D& grid, double p) {
  return spatial(grid, std::vector<double>(grid.size(), p), p);
}

Exponent Exponent::constant(const TimeGrid& time, double p) {
  return temporal(time, std::vector<double>(time.n_nodes(), p));
}

const Grid2D& Exponent::grid() const {
  if (const auto* g = std::get_if<Grid2D>(&domain_)) return *g;
  throw PreconditionError("exponent is defined on a time grid, not a spatial grid");
}

const TimeGrid& Exponent::time_grid() const {
  if (const auto* t = std::get_if<TimeGrid>(&domain_)) return *t;
  throw PreconditionError("exponent is defined on a spatial grid, not a time grid");
}

double Exponent::measure() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s;
}

bool Exponent::same_domain(const Exponent& other) const { return domain_ == other.domain_; }

ExponentFamily ExponentFamily::parse(const std::string& text) {
  ExponentFamily fam;
  const auto colon = text.find(':');
  fam.name = text.substr(0, colon);
  if (fam.name.empty()) throw ConfigError("empty exponent family in '" + text + "'");
  if (colon == std::string::npos) return fam;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    std::string key = eq == std::string::npos ? "value" : item.substr(0, eq);
    std::string val = eq == std::string::npos ? item : item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != val.size() || val.empty()) {
      throw ConfigError("exponent family '" + text + "': parameter '" + key + "' is not a number");
    }
    fam.params[key] = v;
  }
  return fam;
}

std::string ExponentFamily::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << name;
  char sep = ':';
  for (const auto& [k, v] : params) {
    os << sep << k << '=' << v;
    sep = ',';
  }
  return os.str();
}

double ExponentFamily::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) {
    throw ConfigError("exponent family '" + name + "' needs parameter '" + key + "'");
  }
  return it->second;
}

double ExponentFamily::param_or(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Exponent make_exponent(const Grid2D& grid, const ExponentFamily& fam) {
  const int n = grid.n_points();
  const double c = grid.center();
  const double base_k = 2.0 * std::numbers::pi / grid.box_side();
  std::vector<double> v(grid.size());
  std::optional<double> p_inf;
  auto fill = [&](auto&& fn) {
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        const double x1 = grid.coordinate(i1);
        const double x2 = grid.coordinate(i2);
        v[static_cast<std::size_t>(i1) * n + i2] = fn(x1, x2);
      }
    }
  };
  if (fam.name == "const") {
    const double p = fam.param("value");
    fill([p](double, double) { return p; });
    p_inf = p;
  } else if (fam.name == "logdrift") {
    const double base = fam.param("base");
    const double amp = fam.param("amp");
    fill([&](double x1, double x2) {
      const double r2 = (x1 - c) * (x1 - c) + (x2 - c) * (x2 - c);
      return base + amp / std::log(std::numbers::e + r2);
    });
    p_inf = base;
  } else if (fam.name == "bump") {
    const double base = fam.param("base");
    const double amp = fam.param("amp");
    const double w = fam.param_or("width", 0.25 * grid.box_side());
    fill([&](double x1, double x2) {
      const double r2 = (x1 - c) * (x1 - c) + (x2 - c) * (x2 - c);
      return base + amp * std::exp(-r2 / (2.0 * w * w));
    });
    p_inf = base;
  } else if (fam.name == "wave") {
    const double base = fam.param("base");
    const double amp = fam.param("amp");
    const double k = fam.param_or("k", 1.0);
    fill([&](double x1, double x2) {
      return base + amp * std::sin(k * base_k * x1) * std::cos(k * base_k * x2);
    });
    p_inf = base;
  } else if (fam.name == "split") {
    const double left = fam.param("left");
    const double right = fam.param("right");
    fill([&](double x1, double) { return x1 < c ? left : right; });
    p_inf = right;
  } else {
    throw ConfigError("unknown exponent family '" + fam.name + "'");
  }
  return Exponent::spatial(grid, std::move(v), p_inf);
}

Exponent make_exponent(const TimeGrid& time, const ExponentFamily& fam) {
  std::vector<double> v(time.n_nodes());
  const double T = time.final_time();
  for (int i = 0; i < time.n_nodes(); ++i) {
    const double t = time.node(i);
    if (fam.name == "const") {
      v[i] = fam.param("value");
    } else if (fam.name == "logdrift") {
      v[i] = fam.param("base") + fam.param("amp") / std::log(std::numbers::e + t);
    } else if (fam.name == "wave") {
      v[i] = fam.param("base") +
             fam.param("amp") * std::sin(2.0 * std::numbers::pi * fam.param_or("k", 1.0) * t / T);
    } else if (fam.name == "split") {
      v[i] = t < 0.5 * T ? fam.param("left") : fam.param("right");
    } else {
      throw ConfigError("exponent family '" + fam.name + "' is not available on a time interval");
    }
  }
  return Exponent::temporal(time, std::move(v));
}

Exponent conjugate_exponent(const Exponent& p) {
  if (!(p.p_minus() > 1.0)) throw DomainError("conjugate exponent is unbounded where p = 1");
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i] / (p[i] - 1.0);
  if (p.is_spatial()) {
    const double pi = p.p_infinity();
    return Exponent::spatial(p.grid(), std::move(v), pi / (pi - 1.0));
  }
  return Exponent::temporal(p.time_grid(), std::move(v));
}

Exponent harmonic_sum(const Exponent& p1, const Exponent& p2) {
  if (!p1.same_domain(p2)) throw ShapeError("harmonic_sum: exponents live on different domains");
  std::vector<double> v(p1.size());
  for (std::size_t i = 0; i < p1.size(); ++i) {
    v[i] = 1.0 / (1.0 / p1[i] + 1.0 / p2[i]);
    if (!(v[i] > 1.0)) {
      throw DomainError("combined Hoelder exponent drops to " + std::to_string(v[i]) + " <= 1");
    }
  }
  if (p1.is_spatial()) {
    const double pi = 1.0 / (1.0 / p1.p_infinity() + 1.0 / p2.p_infinity());
    return Exponent::spatial(p1.grid(), std::move(v), pi > 1.0 ? std::optional(pi) : std::nullopt);
  }
  return Exponent::temporal(p1.time_grid(), std::move(v));
}

}  // namespace sqg
