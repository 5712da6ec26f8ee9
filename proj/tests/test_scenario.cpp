#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqg/error.hpp"
#include "sqg/report.hpp"
#include "sqg/scenario.hpp"
#include "test_util.hpp"

namespace sqg {
namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("sqg_scenario_" + name);
  fs::remove_all(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

const char* kSmall = R"(# small case
name = tiny
grid = 32
alpha = 1.5
T = 0.25
n_time = 16
p = 6
q = const:12
p_bar = logdrift:base=6,amp=0.5
theta0 = mode:k1=1,k2=0,kind=sin,amp=0.1 + mode:k1=1,k2=1,kind=sin,amp=0.1
forcing = zero
checks = picard
)";

TEST(Scenario, ParsesKeys) {
  const Scenario s = parse_scenario(kSmall);
  EXPECT_EQ(s.name, "tiny");
  EXPECT_EQ(s.grid_points, 32);
  EXPECT_DOUBLE_EQ(s.solver.alpha, 1.5);
  EXPECT_EQ(s.solver.n_time, 16);
  EXPECT_EQ(s.theta0.terms.size(), 2u);
  EXPECT_TRUE(s.forcing.is_zero());
  ASSERT_EQ(s.checks.size(), 1u);
  EXPECT_EQ(s.checks[0].id, "picard");
  EXPECT_NEAR(s.side(), testing::kTwoPi, 1e-15);
  const DataSpec again = DataSpec::parse(s.theta0.to_string());
  EXPECT_EQ(again.to_string(), s.theta0.to_string());
}

TEST(Scenario, RejectsMalformedInput) {
  EXPECT_THROW(parse_scenario("grid = 32\ngrid = 64\n"), ConfigError);
  EXPECT_THROW(parse_scenario("colour = red\n"), ConfigError);
  EXPECT_THROW(parse_scenario("grid 32\n"), ConfigError);
  EXPECT_THROW(parse_scenario("alpha = fast\n"), ConfigError);
  EXPECT_THROW(parse_scenario("checks = teleport\n"), ConfigError);
  EXPECT_THROW(parse_scenario("checks = regularity:b9=1\n"), ConfigError);
  EXPECT_THROW(DataSpec::parse("mode:k1=1,kind=tan"), ConfigError);
  EXPECT_THROW(DataSpec::parse("vortex:amp=1"), ConfigError);
  EXPECT_THROW(load_scenario("/nonexistent/definitely/missing.scn"), IoError);
}

TEST(Scenario, KnownChecksOrder) {
  const std::vector<std::string> expected{"decay_slopes", "norm_axioms", "holder",  "duality",
                                          "embedding",    "maximal",     "riesz_potential",
                                          "picard",       "estimates",   "regularity", "scaling"};
  EXPECT_EQ(known_checks(), expected);
}

TEST(Scenario, ZeroDataPasses) {
  Scenario s = parse_scenario(kSmall);
  s.theta0 = DataSpec::parse("zero");
  const RunOutcome out = run_scenario(s);
  EXPECT_EQ(out.exit_code, kExitPass) << out.diagnostic;
  ASSERT_EQ(out.results.checks.size(), 1u);
  EXPECT_EQ(out.results.checks[0].status, CheckStatus::pass);
  bool saw_one_iteration = false;
  for (const std::string& d : out.results.checks[0].details) {
    if (d.find("iterations 1,") != std::string::npos) saw_one_iteration = true;
  }
  EXPECT_TRUE(saw_one_iteration);
}

TEST(Scenario, ConfigErrorsExitTwo) {
  Scenario s = parse_scenario(kSmall);
  s.solver.p = 3.0;
  RunOutcome out = run_scenario(s);
  EXPECT_EQ(out.exit_code, kExitConfigError);
  EXPECT_NE(out.diagnostic.find("p > 2/(alpha-1)"), std::string::npos);

  Scenario shifted = parse_scenario(kSmall);
  shifted.theta0 = DataSpec::parse("gaussian:width=0.1,amp=1");
  EXPECT_EQ(run_scenario(shifted).exit_code, kExitConfigError);
  RunOverrides o;
  o.project_mean = true;
  apply_overrides(shifted, o);
  EXPECT_EQ(run_scenario(shifted).exit_code, kExitPass);
}

TEST(Scenario, UnwritableOutputExitsThree) {
  const fs::path d = fresh_dir("blocked");
  fs::create_directories(d);
  std::ofstream(d / "file") << "x";
  const RunOutcome out = run_scenario_to(parse_scenario(kSmall), (d / "file" / "out").string());
  EXPECT_EQ(out.exit_code, kExitIoError);
  fs::remove_all(d);
}

TEST(Scenario, OutputsAreDeterministic) {
  const Scenario s = parse_scenario(kSmall);
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  ASSERT_EQ(run_scenario_to(s, a.string()).exit_code, kExitPass);
  ASSERT_EQ(run_scenario_to(s, b.string()).exit_code, kExitPass);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const fs::path other = b / entry.path().filename();
    ASSERT_TRUE(fs::exists(other)) << other;
    EXPECT_EQ(slurp(entry.path()), slurp(other)) << entry.path().filename();
    ++files;
  }
  EXPECT_GE(files, 5u);  // report, two series, two fields
  EXPECT_TRUE(fs::exists(a / "report.txt"));
  EXPECT_TRUE(fs::exists(a / "theta_final.sqgf"));

  const std::string csv = slurp(a / "picard_iterates.csv");
  EXPECT_EQ(csv.rfind("iterate,xt_norm,residual,contraction_ratio\r\n", 0), 0u);
  std::size_t rows = 0;
  for (std::size_t pos = 0; (pos = csv.find("\r\n", pos)) != std::string::npos; pos += 2) ++rows;
  EXPECT_GE(rows, 3u);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Report, FormatsAndRejectsEmptyResults) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_THROW(emit_report(RunResults{}, fresh_dir("empty").string()), PreconditionError);
}

TEST(Report, QuotesCsvFields) {
  RunResults r;
  r.scenario = "quote";
  r.series.push_back(TimeSeries{"q", {"plain", "with,comma", "with\"quote"}, {{1.0, 2.0, 3.0}}});
  const fs::path d = fresh_dir("quote");
  emit_report(r, d.string());
  EXPECT_EQ(slurp(d / "q.csv"), "plain,\"with,comma\",\"with\"\"quote\"\r\n1,2,3\r\n");
  fs::remove_all(d);
}

}  // namespace
}  // namespace sqg
