#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "sqg/exponent.hpp"
#include "sqg/field.hpp"

namespace sqg {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Rectangle-rule L^p norm, (sum |f|^p h^2)^(1/p); p = infinity is the max-abs.
/// Throws DomainError for p < 1.
double classical_lp_norm(const ScalarField& f, double p);
/// Weighted variant for time series or any sampled measure space.
double classical_lp_norm(std::span<const double> values, std::span<const double> weights,
                         double p);

/// rho(f) = sum_i w_i |f_i|^p_i. Throws ShapeError when the sizes disagree.
double modular(std::span<const double> values, const Exponent& p);
double modular(const ScalarField& f, const Exponent& p);

struct LuxemburgResult {
  double norm_value = 0.0;
  double modular_at_norm = 0.0;
  int iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// inf{lambda > 0 : rho(f / lambda) <= 1} by bracket expansion from the
/// classical L^{p+} norm followed by bisection to relative width 1e-12.
/// The returned norm is the upper end of the final bracket. Throws DataError
/// on non-finite input.
LuxemburgResult luxemburg_norm(std::span<const double> values, const Exponent& p);
LuxemburgResult luxemburg_norm(const ScalarField& f, const Exponent& p);

/// Shorthand for luxemburg_norm(...).norm_value.
double lp_norm(const ScalarField& f, const Exponent& p);

struct LogHolderReport {
  double c_local = 0.0;
  double c_infinity = 0.0;
  double p_infinity = 0.0;
  /// Largest |1/p(x) - 1/p(y)| over axis neighbours at distance h and 2h.
  double oscillation_h = 0.0;
  double oscillation_2h = 0.0;
  bool log_holder = true;
};

/// Smallest constants in |1/p(x) - 1/p(y)| <= C_local / log(e + 1/|x-y|) and
/// |1/p(x) - 1/p_inf| <= C_inf / log(e + |x|), with |x| measured from the box
/// center. Pairs are taken over a subsample of at most 64 x 64 points plus
/// every axis-neighbour pair at full resolution. The exponent is flagged as
/// not log-Hoelder when the neighbour oscillation does not shrink under
/// refinement (ratio above 0.75), which is how a jump shows up on a grid.
/// Throws PreconditionError for temporal exponents.
LogHolderReport log_holder_check(const Exponent& p);

/// ||f g||_{p(.)} / (||f||_{p1(.)} ||g||_{p2(.)}) with 1/p = 1/p1 + 1/p2.
/// Returns 0 when f g vanishes identically. Throws DomainError when the
/// combined exponent drops to p- <= 1.
double holder_product_check(const ScalarField& f, const ScalarField& g, const Exponent& p1,
                            const Exponent& p2);

struct DualSandwichReport {
  double norm = 0.0;          // ||f||_{p(.)}
  double sup_integral = 0.0;  // S = max over dictionary of int |f g|, ||g||_{p'(.)} = 1
  /// S / ||f||; 0 when f vanishes.
  double ratio = 0.0;
  bool upper_holds = true;  // S <= 2 ||f|| (+1e-6 relative slack)
  bool lower_holds = true;  // S >= ||f|| / 2 (-1e-6 relative slack)
};

/// |f / ||f|||^(p(x) - 1), which has unit conjugate modular and attains int |f g| = ||f||.
ScalarField canonical_dual_witness(const ScalarField& f, const Exponent& p);

/// Evaluates the conjugate-norm sandwich over a dictionary of dual fields,
/// each normalized to unit L^{p'(.)} norm. Dictionary entries that vanish are
/// skipped. Throws ConfigError on an empty dictionary.
DualSandwichReport dual_sandwich_check(const ScalarField& f, const Exponent& p,
                                       const std::vector<ScalarField>& dictionary);

struct EmbeddingReport {
  bool applicable = false;  // p1 <= p2 pointwise
  double ratio = 0.0;       // ||f||_{p1(.)} / ||f||_{p2(.)}
  double bound = 0.0;       // 1 + |Omega|
  bool holds = true;
};

/// Bounded-domain embedding: ratio against the (1 + |Omega|) constant, with
/// |Omega| the measure of the exponents' domain. Not applicable (no
/// exception) when p1 > p2 somewhere.
EmbeddingReport embedding_check(const ScalarField& f, const Exponent& p1, const Exponent& p2);

struct EmbeddingClassReport {
  bool lower_bound_ok = false;  // p <= pbar-
  bool grows_outward = false;   // p pbar / (pbar - p) nondecreasing ring by ring toward the boundary
  bool member() const { return lower_bound_ok && grows_outward; }
};

/// Finite-box check of the class of exponents pbar(.) that embed into L^p:
/// p <= pbar- and the quantity p pbar(x) / (pbar(x) - p) grows toward the
/// box boundary (the stand-in for |x| -> infinity).
EmbeddingClassReport embedding_class_check(double p, const Exponent& pbar);

struct UnboundedEmbeddingReport {
  EmbeddingClassReport membership;
  double ratio = 0.0;  // ||f||_p / ||f||_{pbar(.)}
};

UnboundedEmbeddingReport embedding_unbounded_check(const ScalarField& f, double p,
                                                   const Exponent& pbar);

}  // namespace sqg
