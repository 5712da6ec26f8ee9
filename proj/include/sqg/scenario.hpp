#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqg/report.hpp"
#include "sqg/trajectory.hpp"

namespace sqg {

/// One generator term, e.g. "mode:k1=1,k2=0,kind=sin,amp=0.01".
///   mode      k1, k2, kind (sin|cos), amp
///   gaussian  c1, c2 (fractions of the box side, default 0.5), width (fraction), amp
///   dog       width (fraction), amp
///   random    seed (defaults to the scenario seed), band, amp
struct GeneratorTerm {
  std::string kind;
  std::map<std::string, std::string> params;
};

/// Sum of generator terms; "zero" (or no terms) is the zero field.
struct DataSpec {
  std::vector<GeneratorTerm> terms;

  /// Throws ConfigError on unknown generators or malformed parameters.
  static DataSpec parse(const std::string& text);
  std::string to_string() const;
  bool is_zero() const { return terms.empty(); }
  ScalarField build(const Grid2D& grid, std::uint64_t scenario_seed) const;
};

/// Check identifier with optional parameters, e.g. "regularity:b1=1,b2=1".
struct CheckSpec {
  std::string id;
  std::map<std::string, double> params;
  std::string to_string() const;
};

/// Known check identifiers in execution order.
const std::vector<std::string>& known_checks();

struct Scenario {
  std::string name = "scenario";
  int grid_points = 128;
  double box_side = 0.0;  // 0 selects 2 pi
  SolverParams solver;
  DataSpec theta0;
  DataSpec forcing;  // constant in time
  std::vector<CheckSpec> checks;
  std::uint64_t seed = 1;
  bool project_mean = false;
  bool strict = false;

  double side() const;
};

/// Parses the `key = value` format with `#` comments. Throws ConfigError.
Scenario parse_scenario(const std::string& text, const std::string& default_name = "scenario");
/// Throws IoError when the file cannot be read, ConfigError when it is malformed.
Scenario load_scenario(const std::string& path);

struct RunOverrides {
  std::optional<int> grid_points;
  std::optional<std::uint64_t> seed;
  bool project_mean = false;
  bool strict = false;
};

void apply_overrides(Scenario& s, const RunOverrides& o);

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitConfigError = 2, kExitIoError = 3 };

struct RunOutcome {
  int exit_code = kExitPass;
  /// Empty unless the run stopped on a configuration problem.
  std::string diagnostic;
  RunResults results;
};

/// Validates the scenario and runs its checks in the order of known_checks().
/// Configuration problems give kExitConfigError before any computation.
RunOutcome run_scenario(const Scenario& s);

/// run_scenario followed by emit_report; I/O failures give kExitIoError.
RunOutcome run_scenario_to(const Scenario& s, const std::string& out_dir);

}  // namespace sqg
