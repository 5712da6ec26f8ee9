#include "sqg/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqg/error.hpp"
#include "sqg/sqgf.hpp"

namespace sqg {

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << text;
  if (!os) throw IoError("write failed: " + path.string());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_series(const TimeSeries& ts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ts.columns.size(); ++i) {
    os << (i ? "," : "") << csv_field(ts.columns[i]);
  }
  os << "\r\n";
  for (const auto& row : ts.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << "\r\n";
  }
  return os.str();
}

std::string render_slope(const SlopeSeries& s) {
  std::ostringstream os;
  os << "t,norm\r\n";
  for (const auto& [t, v] : s.points) os << format_number(t) << "," << format_number(v) << "\r\n";
  os << "measured_slope," << format_number(s.measured_slope) << "\r\n";
  os << "theoretical_slope," << format_number(s.theoretical_slope) << "\r\n";
  os << "r_squared," << format_number(s.r_squared) << "\r\n";
  return os.str();
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::warn:
      return "warn";
    case CheckStatus::fail:
      return "fail";
  }
  return "?";
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_report(const RunResults& r) {
  std::ostringstream os;
  os << "scenario: " << r.scenario << "\n";
  for (const std::string& line : r.header) os << line << "\n";
  os << "\ntraceability\n";
  std::size_t w_id = 5;
  for (const CheckResult& c : r.checks) w_id = std::max(w_id, c.id.size());
  for (const CheckResult& c : r.checks) {
    os << "  " << c.id << std::string(w_id - c.id.size() + 2, ' ') << to_string(c.status) << "  "
       << c.anchor << "\n";
  }
  for (const CheckResult& c : r.checks) {
    if (c.details.empty()) continue;
    os << "\n[" << c.id << "]\n";
    for (const std::string& d : c.details) os << "  " << d << "\n";
  }
  return os.str();
}

void emit_report(const RunResults& results, const std::string& out_dir) {
  if (results.empty()) throw PreconditionError("emit_report: nothing to report");
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + out_dir);
  for (const TimeSeries& ts : results.series) write_text(dir / (ts.name + ".csv"), render_series(ts));
  for (const SlopeSeries& s : results.slopes) {
    write_text(dir / ("slope_" + s.name + ".csv"), render_slope(s));
  }
  for (const NamedField& f : results.fields) write_field(f.field, (dir / (f.name + ".sqgf")).string());
  write_text(dir / "report.txt", render_report(results));
}

}  // namespace sqg
