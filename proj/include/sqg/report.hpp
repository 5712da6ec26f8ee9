#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sqg/field.hpp"

namespace sqg {

enum class CheckStatus { pass, warn, fail };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  /// Mathematical statement the check exercises.
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> details;
};

/// Table written as CSV: header row plus numeric rows.
struct TimeSeries {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct SlopeSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;  // (t, norm)
  double measured_slope = 0.0;
  double theoretical_slope = 0.0;
  double r_squared = 0.0;
};

struct NamedField {
  std::string name;
  ScalarField field;
};

struct RunResults {
  std::string scenario;
  std::vector<std::string> header;  // free-form lines at the top of report.txt
  std::vector<CheckResult> checks;
  std::vector<TimeSeries> series;
  std::vector<SlopeSeries> slopes;
  std::vector<NamedField> fields;

  bool empty() const {
    return checks.empty() && series.empty() && slopes.empty() && fields.empty();
  }
};

/// Shortest round-trip decimal text for a double (printf %.17g).
std::string format_number(double v);

/// Writes <name>.csv per series, slope_<name>.csv per slope check, <name>.sqgf
/// per field and report.txt into out_dir (created if missing). Throws
/// PreconditionError on empty results and IoError on write failures.
void emit_report(const RunResults& results, const std::string& out_dir);

/// report.txt contents.
std::string render_report(const RunResults& results);

}  // namespace sqg
