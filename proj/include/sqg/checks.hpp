#pragma once

#include <cstdint>
#include <vector>

#include "sqg/exponent.hpp"
#include "sqg/semigroup.hpp"

namespace sqg {

/// Four spatial exponent families (log-decaying, bump, wave, split) with
/// lengths relative to the box side.
std::vector<ExponentFamily> standard_exponent_families(double box_side);

struct NormAxiomStats {
  int pairs = 0;
  double homogeneity = 0.0;           // max | ||c f|| - |c| ||f|| | / (|c| ||f||)
  double triangle_slack = 0.0;        // max (||f+g|| - ||f|| - ||g||) / (||f|| + ||g||)
  double unit_modular = 0.0;          // max | rho(f / ||f||) - 1 |
  double constant_consistency = 0.0;  // max relative gap to the classical norm
};

/// Norm axioms over `pairs` seeded random pairs and the standard families;
/// constant-exponent consistency over p in {1.5, 2, 3, 8}.
NormAxiomStats norm_axiom_stats(const Grid2D& grid, std::uint64_t seed, int pairs);

struct StatedConstantStats {
  int sandwich_cases = 0;
  double sandwich_min = 0.0;  // smallest S / ||f||, lower bound 1/2
  double sandwich_max = 0.0;  // largest S / ||f||, upper bound 2
  int embedding_cases = 0;
  double embedding_max = 0.0;  // largest ratio / (1 + |Omega|)
  bool holds(double slack = 1e-6) const;
};

/// Duality sandwich (canonical witness included in every dictionary) and the
/// bounded-domain embedding over a fixed test family.
StatedConstantStats stated_constant_stats(const Grid2D& grid, std::uint64_t seed);

struct DecayCase {
  double alpha = 0.0;
  double p = 0.0;
  double q = 0.0;
  double nu = 0.0;
  SlopeReport report;
};

/// alpha in {1.2, 1.5, 2} times (p, q, nu) in {(2,inf,0), (1,2,0), (2,2,1), (2,4,0)}.
std::vector<DecayCase> decay_matrix(const Grid2D& grid);

}  // namespace sqg
