#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sqg/error.hpp"
#include "sqg/scenario.hpp"
#include "sqg/sqgf.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Mild-solution solver and estimate laboratory for the dissipative SQG equation"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = "out";
  sqg::RunOverrides overrides;
  int grid = 0;
  std::uint64_t seed = 0;
  CLI::App* run = app.add_subcommand("run", "Run a scenario file and write its report");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  CLI::Option* grid_opt = run->add_option("--grid", grid, "Override the grid size N");
  CLI::Option* seed_opt = run->add_option("--seed", seed, "Override the scenario seed");
  run->add_flag("--project-mean", overrides.project_mean, "Subtract the mean of the data fields");
  run->add_flag("--strict", overrides.strict, "Treat warnings as failures");

  std::string field_path;
  CLI::App* info = app.add_subcommand("info", "Print the header and extrema of an SQGF file");
  info->add_option("file", field_path, "SQGF file")->required();

  CLI11_PARSE(app, argc, argv);

  if (info->parsed()) {
    try {
      const sqg::ScalarField f = sqg::read_field(field_path);
      std::printf("n_points %d\nbox_side %.17g\nmax_abs %.17g\nmean %.17g\n",
                  f.grid().n_points(), f.grid().box_side(), f.max_abs(), f.mean());
      return sqg::kExitPass;
    } catch (const sqg::IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return sqg::kExitIoError;
    } catch (const sqg::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return sqg::kExitConfigError;
    }
  }

  if (*grid_opt) overrides.grid_points = grid;
  if (*seed_opt) overrides.seed = seed;
  sqg::Scenario scenario;
  try {
    scenario = sqg::load_scenario(scenario_path);
  } catch (const sqg::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return sqg::kExitIoError;
  } catch (const sqg::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return sqg::kExitConfigError;
  }
  sqg::apply_overrides(scenario, overrides);

  const sqg::RunOutcome outcome = sqg::run_scenario_to(scenario, out_dir);
  if (outcome.exit_code == sqg::kExitConfigError) {
    std::cerr << "config error: " << outcome.diagnostic << "\n";
    return outcome.exit_code;
  }
  if (outcome.exit_code == sqg::kExitIoError) {
    std::cerr << "error: " << outcome.diagnostic << "\n";
    return outcome.exit_code;
  }
  for (const sqg::CheckResult& c : outcome.results.checks) {
    std::cout << sqg::to_string(c.status) << "  " << c.id << "\n";
  }
  std::cout << "report: " << out_dir << "/report.txt\n";
  return outcome.exit_code;
}
