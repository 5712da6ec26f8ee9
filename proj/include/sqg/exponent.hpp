#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sqg/grid.hpp"

namespace sqg {

/// Uniform nodes t_i = i T / (n - 1), i = 0..n-1, on [0, T].
///
/// Node i owns the dual cell [t_i - dt/2, t_i + dt/2] clipped to [0, T], so
/// the quadrature weights are the trapezoid weights and sum to T exactly.
class TimeGrid {
 public:
  /// Throws ConfigError unless T > 0 and n_nodes >= 2.
  TimeGrid(double T, int n_nodes);

  double final_time() const { return T_; }
  int n_nodes() const { return n_; }
  double step() const { return T_ / (n_ - 1); }
  double node(int i) const { return i * step(); }
  std::pair<double, double> cell(int i) const;
  double weight(int i) const;
  std::vector<double> weights() const;

  bool operator==(const TimeGrid& o) const { return T_ == o.T_ && n_ == o.n_; }
  bool operator!=(const TimeGrid& o) const { return !(*this == o); }

 private:
  double T_;
  int n_;
};

/// Sampled variable exponent on a spatial grid or on a time grid, with
/// 1 < p- <= p(.) <= p+ < infinity.
class Exponent {
 public:
  /// Throws DomainError when a sample is not finite or not > 1, ShapeError on size mismatch.
  static Exponent spatial(const Grid2D& grid, std::vector<double> values,
                          std::optional<double> p_infinity = std::nullopt);
  static Exponent temporal(const TimeGrid& time, std::vector<double> values);
  static Exponent constant(const Grid2D& grid, double p);
  static Exponent constant(const TimeGrid& time, double p);

  bool is_spatial() const { return std::holds_alternative<Grid2D>(domain_); }
  /// Throws PreconditionError when the exponent is temporal.
  const Grid2D& grid() const;
  /// Throws PreconditionError when the exponent is spatial.
  const TimeGrid& time_grid() const;

  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  double p_minus() const { return p_minus_; }
  double p_plus() const { return p_plus_; }
  /// Declared limit at infinity; for spatial exponents without a declaration
  /// this is the value at the point farthest from the box center.
  double p_infinity() const { return p_infinity_; }
  bool is_constant() const { return p_minus_ == p_plus_; }

  /// Quadrature weights of the sample points (cell area or trapezoid weight).
  std::span<const double> weights() const { return weights_; }
  double measure() const;

  bool same_domain(const Exponent& other) const;

 private:
  Exponent(std::variant<Grid2D, TimeGrid> domain, std::vector<double> values,
           std::vector<double> weights, std::optional<double> p_infinity);

  std::variant<Grid2D, TimeGrid> domain_;
  std::vector<double> values_;
  std::vector<double> weights_;
  double p_minus_;
  double p_plus_;
  double p_infinity_;
};

/// Named analytic exponent family, e.g. "const:4" or "logdrift:base=4,amp=0.5".
///
///   const     value                 p = value
///   logdrift  base, amp             spatial: base + amp / log(e + |x - c|^2)
///                                   temporal: base + amp / log(e + t)
///   bump      base, amp, width      base + amp exp(-|x - c|^2 / (2 width^2))  (spatial only)
///   wave      base, amp, k          spatial: base + amp sin(k x1 2pi/L) cos(k x2 2pi/L)
///                                   temporal: base + amp sin(2 pi k t / T)
///   split     left, right           left for x1 < c (or t < T/2), right otherwise
struct ExponentFamily {
  std::string name;
  std::map<std::string, double> params;

  /// Parses "name" or "name:key=value,...". "const:4" is shorthand for const:value=4.
  static ExponentFamily parse(const std::string& text);
  std::string to_string() const;
  double param(const std::string& key) const;
  double param_or(const std::string& key, double fallback) const;
};

Exponent make_exponent(const Grid2D& grid, const ExponentFamily& family);
Exponent make_exponent(const TimeGrid& time, const ExponentFamily& family);

/// Pointwise conjugate p' = p / (p - 1). Throws DomainError if p- <= 1.
Exponent conjugate_exponent(const Exponent& p);

/// 1/r = 1/p1 + 1/p2 pointwise. Throws DomainError if the result has r- <= 1.
Exponent harmonic_sum(const Exponent& p1, const Exponent& p2);

}  // namespace sqg
