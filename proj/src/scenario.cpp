#include "sqg/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include "sqg/checks.hpp"
#include "sqg/error.hpp"
#include "sqg/estimates.hpp"
#include "sqg/generators.hpp"
#include "sqg/lebesgue.hpp"
#include "sqg/maximal.hpp"
#include "sqg/mild.hpp"
#include "sqg/regularity.hpp"
#include "sqg/riesz_potential.hpp"
#include "sqg/scaling.hpp"

namespace sqg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw ConfigError(what + ": expected a number, got '" + text + "'");
  }
  return v;
}

long long parse_integer(const std::string& text, const std::string& what) {
  const double v = parse_double(text, what);
  if (v != std::floor(v) || std::abs(v) > 9.0e15) {
    throw ConfigError(what + ": expected an integer, got '" + text + "'");
  }
  return static_cast<long long>(v);
}

bool parse_bool(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError(what + ": expected true or false, got '" + text + "'");
}

// "name:k=v,k=v" -> (name, {k: v}); a bare value after the colon is stored under "value".
std::pair<std::string, std::map<std::string, std::string>> parse_call(const std::string& text) {
  const std::string t = trim(text);
  const auto colon = t.find(':');
  std::pair<std::string, std::map<std::string, std::string>> out;
  out.first = trim(t.substr(0, colon));
  if (out.first.empty()) throw ConfigError("missing identifier in '" + text + "'");
  if (colon == std::string::npos) return out;
  for (const std::string& item : split(t.substr(colon + 1), ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      out.second["value"] = item;
    } else {
      out.second[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
    }
  }
  return out;
}

const std::map<std::string, std::set<std::string>>& generator_params() {
  static const std::map<std::string, std::set<std::string>> m{
      {"mode", {"k1", "k2", "kind", "amp"}},
      {"gaussian", {"c1", "c2", "width", "amp"}},
      {"dog", {"width", "amp"}},
      {"random", {"seed", "band", "amp"}},
  };
  return m;
}

const std::map<std::string, std::set<std::string>>& check_params() {
  static const std::map<std::string, std::set<std::string>> m{
      {"decay_slopes", {}},   {"norm_axioms", {"pairs"}}, {"holder", {}},
      {"duality", {}},        {"embedding", {}},          {"maximal", {}},
      {"riesz_potential", {}}, {"picard", {}},            {"estimates", {}},
      {"regularity", {"b1", "b2"}}, {"scaling", {"lambda", "contrast"}},
  };
  return m;
}

std::string param_or(const std::map<std::string, std::string>& m, const std::string& k,
                     const std::string& fallback) {
  const auto it = m.find(k);
  return it == m.end() ? fallback : it->second;
}

double check_param(const CheckSpec& c, const std::string& k, double fallback) {
  const auto it = c.params.find(k);
  return it == c.params.end() ? fallback : it->second;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string g6(double v) { return fmt("%.6g", v); }

CheckStatus hard(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }
CheckStatus soft(bool ok) { return ok ? CheckStatus::pass : CheckStatus::warn; }

CheckStatus worst(CheckStatus a, CheckStatus b) {
  return static_cast<int>(a) > static_cast<int>(b) ? a : b;
}

const std::map<std::string, std::string>& anchors() {
  static const std::map<std::string, std::string> m{
      {"decay_slopes", "L^p -> L^q decay of Lambda^nu G_t, rate t^(-nu/alpha - (2/alpha)(1/p - 1/q))"},
      {"norm_axioms", "modular and Luxemburg norm of L^{p(.)}; constant-exponent reduction"},
      {"holder", "Hoelder inequality in L^{p(.)} with 1/p = 1/p1 + 1/p2"},
      {"duality", "norm-conjugate formula, (1/2)||f|| <= sup int |f g| <= 2||f||"},
      {"embedding", "embedding on bounded sets with constant 1 + |Omega|; class of embedding exponents"},
      {"maximal", "maximal function and Riesz transforms bounded on log-Hoelder L^{p(.)}"},
      {"riesz_potential", "Riesz potential I_beta: L^{p(.)} -> L^{q(.)}, 1/q = 1/p - beta/n"},
      {"picard", "mild solution by Picard iteration; bilinear fixed point in the 2 eta ball; smallness condition"},
      {"estimates", "linear estimates for G_t theta0 and the forcing integral; bilinear estimate (1 + T)||theta||^2"},
      {"regularity", "propagation of D^beta regularity through the differentiated mild equation"},
      {"scaling", "critical scaling theta_lambda = lambda^(alpha-1) theta0(lambda x) in L^{2/(alpha-1)}"},
  };
  return m;
}

// Shared state of one scenario run.
struct RunContext {
  const Scenario& scenario;
  Grid2D grid;
  SolverConfig config;
  ScalarField theta0;
  Trajectory forcing;
  RunResults& results;
  std::optional<PicardResult> picard;
  std::optional<StatedConstantStats> stated_constants;

  const PicardResult& solve() {
    if (!picard) picard = picard_solve(theta0, forcing, config);
    return *picard;
  }

  const StatedConstantStats& constants() {
    if (!stated_constants) stated_constants = stated_constant_stats(grid, scenario.seed);
    return *stated_constants;
  }

  // Coarser grid for resolution-stability comparisons, if it is large enough.
  std::optional<Grid2D> coarse() const {
    if (grid.n_points() < 32) return std::nullopt;
    return Grid2D(grid.n_points() / 2, grid.box_side());
  }
};

void stability_line(CheckResult& r, RunContext& ctx, const std::string& label,
                    const std::function<double(const Grid2D&)>& measure) {
  const double fine = measure(ctx.grid);
  const auto coarse = ctx.coarse();
  if (!coarse) {
    r.details.push_back(label + " constant " + g6(fine) + " (grid too small for stability check)");
    return;
  }
  const double base = measure(*coarse);
  const double growth = base > 0.0 ? fine / base : 1.0;
  const bool ok = growth <= 2.0 && base / fine <= 2.0;
  r.details.push_back(label + " constant N=" + std::to_string(coarse->n_points()) + ": " +
                      g6(base) + ", N=" + std::to_string(ctx.grid.n_points()) + ": " + g6(fine) +
                      ", growth " + g6(growth) + (ok ? "" : " (exceeds 2x)"));
  r.status = worst(r.status, soft(ok));
}

void check_decay(CheckResult& r, RunContext& ctx) {
  for (const DecayCase& c : decay_matrix(ctx.grid)) {
    const bool ok = c.report.passes(0.05, 0.99);
    r.status = worst(r.status, hard(ok));
    std::string q = std::isinf(c.q) ? "inf" : g6(c.q);
    const std::string name = "a" + g6(c.alpha) + "_p" + g6(c.p) + "_q" + q + "_nu" + g6(c.nu);
    r.details.push_back(name + ": slope " + g6(c.report.measured_slope) + " vs " +
                        g6(c.report.theoretical_slope) + ", r2 " + fmt("%.6f", c.report.r_squared) +
                        (ok ? "" : " FAIL"));
    SlopeSeries s;
    s.name = name;
    s.points = c.report.per_time_norms;
    s.measured_slope = c.report.measured_slope;
    s.theoretical_slope = c.report.theoretical_slope;
    s.r_squared = c.report.r_squared;
    ctx.results.slopes.push_back(std::move(s));
  }
}

void check_norm_axioms(CheckResult& r, RunContext& ctx, const CheckSpec& spec) {
  const int pairs = static_cast<int>(check_param(spec, "pairs", 12));
  const NormAxiomStats st = norm_axiom_stats(ctx.grid, ctx.scenario.seed, pairs);
  const bool ok = st.homogeneity <= 1e-10 && st.triangle_slack <= 1e-10 &&
                  st.unit_modular <= 1e-8 && st.constant_consistency <= 1e-8;
  r.status = hard(ok);
  r.details.push_back("pairs " + std::to_string(st.pairs));
  r.details.push_back("homogeneity error " + g6(st.homogeneity) + " (limit 1e-10)");
  r.details.push_back("triangle slack " + g6(st.triangle_slack) + " (limit 1e-10)");
  r.details.push_back("unit modular error " + g6(st.unit_modular) + " (limit 1e-8)");
  r.details.push_back("constant-exponent gap " + g6(st.constant_consistency) + " (limit 1e-8)");
}

void check_holder(CheckResult& r, RunContext& ctx) {
  const ScalarField f = random_bandlimited(ctx.grid, ctx.scenario.seed, 5);
  const ScalarField g = difference_of_gaussians(ctx.grid, ctx.grid.box_side() / 12.0);
  const double classical = holder_product_check(f, g, Exponent::constant(ctx.grid, 3.0),
                                                Exponent::constant(ctx.grid, 6.0));
  const bool ok = classical <= 1.0 + 1e-8;
  r.status = hard(ok);
  r.details.push_back("constant exponents (3, 6): ratio " + g6(classical) + " (limit 1 + 1e-8)");
  stability_line(r, ctx, "variable-exponent Hoelder", holder_constant);
}

void check_duality(CheckResult& r, RunContext& ctx) {
  const StatedConstantStats& st = ctx.constants();
  const bool ok = st.sandwich_min >= 0.5 - 1e-6 && st.sandwich_max <= 2.0 + 1e-6;
  r.status = hard(ok);
  r.details.push_back(std::to_string(st.sandwich_cases) + " cases, S/||f|| in [" +
                      g6(st.sandwich_min) + ", " + g6(st.sandwich_max) + "], required [0.5, 2]");
}

void check_embedding(CheckResult& r, RunContext& ctx) {
  const StatedConstantStats& st = ctx.constants();
  const bool ok = st.embedding_max <= 1.0 + 1e-6;
  r.status = hard(ok);
  r.details.push_back(std::to_string(st.embedding_cases) + " cases, max ratio / (1 + |Omega|) = " +
                      g6(st.embedding_max));
  const EmbeddingClassReport cls = embedding_class_check(ctx.config.p(), ctx.config.p_bar());
  r.details.push_back("p_bar = " + ctx.scenario.solver.p_bar.to_string() + ": p <= p_bar- " +
                      (cls.lower_bound_ok ? "yes" : "no") + ", outward growth " +
                      (cls.grows_outward ? "yes" : "no") + " (box-boundary stand-in for infinity)");
  r.status = worst(r.status, soft(cls.member()));
}

void check_maximal(CheckResult& r, RunContext& ctx) {
  double dominance = 0.0;
  double sublinear = 0.0;
  for (int i = 0; i < 4; ++i) {
    const ScalarField f = random_bandlimited(ctx.grid, ctx.scenario.seed + 2 * i, 3 + i);
    const ScalarField g = random_bandlimited(ctx.grid, ctx.scenario.seed + 2 * i + 1, 2 + i, 0.5);
    const ScalarField mf = maximal_function(f);
    const ScalarField mg = maximal_function(g);
    const ScalarField mfg = maximal_function(f + g);
    for (std::size_t k = 0; k < f.size(); ++k) {
      dominance = std::max(dominance, std::abs(f[k]) - mf[k]);
      sublinear = std::max(sublinear, mfg[k] - mf[k] - mg[k]);
    }
  }
  const bool ok = dominance <= 1e-12 && sublinear <= 1e-12;
  r.status = hard(ok);
  r.details.push_back("max(|f| - Mf) = " + g6(dominance) + ", max(M(f+g) - Mf - Mg) = " +
                      g6(sublinear) + " (limit 1e-12)");
  stability_line(r, ctx, "maximal", maximal_constant);
}

void check_riesz_potential(CheckResult& r, RunContext& ctx) {
  const ScalarField f = random_bandlimited(ctx.grid, ctx.scenario.seed, 6);
  const ScalarField composed = riesz_potential_2d(riesz_potential_2d(f, 0.4), 0.7);
  const ScalarField direct = riesz_potential_2d(f, 1.1);
  const double comp_err = max_abs_difference(composed, direct) / direct.max_abs();
  const TimeGrid unit(1.0, 65);
  const std::vector<double> ones(65, 1.0);
  const double at_zero = riesz_potential_1d(ones, unit, 0.5).front();
  const bool ok = comp_err <= 1e-12 && std::abs(at_zero - 2.0) <= 1e-12;
  r.status = hard(ok);
  r.details.push_back("I_0.4 I_0.7 vs I_1.1 relative error " + g6(comp_err) + " (limit 1e-12)");
  r.details.push_back("1D potential of 1 on [0,1] at s=0, beta=1/2: " + fmt("%.15g", at_zero) +
                      " (exact 2)");
  stability_line(r, ctx, "Riesz potential L^2 -> L^4", riesz_potential_constant);
}

std::pair<double, double> smallness_constants(RunContext& ctx) {
  const EstimateReport est =
      estimate_suite(ctx.config, default_estimate_family(), {ctx.config.final_time()});
  return {est.c1_max, est.c2_max};
}

void check_picard(CheckResult& r, RunContext& ctx) {
  const auto [c1, c2] = smallness_constants(ctx);
  PicardOptions opts;
  opts.c1 = c1;
  opts.c2 = c2;
  ctx.picard = picard_solve(ctx.theta0, ctx.forcing, ctx.config, opts);
  const PicardResult& res = *ctx.picard;
  const double tol = ctx.config.params().picard_tol;
  const SmallnessAdvisory& adv = *res.smallness;

  TimeSeries hist{"picard_iterates", {"iterate", "xt_norm", "residual", "contraction_ratio"}, {}};
  for (const PicardState& s : res.states) {
    hist.rows.push_back({static_cast<double>(s.iterate_index), s.xt_norm, s.residual,
                         s.contraction_ratio});
    r.details.push_back("iterate " + std::to_string(s.iterate_index) + ": norm " + g6(s.xt_norm) +
                        ", residual " + g6(s.residual) + ", ratio " + g6(s.contraction_ratio));
  }
  ctx.results.series.push_back(std::move(hist));
  r.details.push_back("iterations " + std::to_string(res.iterations()) + ", converged " +
                      (res.converged ? "yes" : "no") + ", diverged " + (res.diverged ? "yes" : "no"));
  r.details.push_back("eta " + g6(res.eta) + ", measured C1 " + g6(c1) + ", C2 " + g6(c2));
  r.details.push_back("smallness: data norm " + g6(adv.data_norm) + " vs threshold " +
                      g6(adv.threshold) + (adv.holds ? " (holds)" : " (not satisfied)"));

  if (!res.converged) {
    r.status = adv.holds ? CheckStatus::fail : CheckStatus::warn;
    return;
  }
  const Trajectory& theta = res.solution();
  const double norm = res.final_state().xt_norm;
  const double fp = fixed_point_residual(theta, ctx.theta0, ctx.forcing, ctx.config);
  const bool fp_ok = fp <= 2.0 * tol * std::max(1.0, norm);
  r.details.push_back("fixed-point residual " + g6(fp));
  r.status = hard(fp_ok);
  if (adv.holds) {
    const bool ball = norm <= 2.0 * res.eta * (1.0 + 1e-6) + tol;
    PicardOptions alt;
    alt.initial_guess = 1.5 * linear_part(ctx.theta0, ctx.forcing, ctx.config);
    const PicardResult other = picard_solve(ctx.theta0, ctx.forcing, ctx.config, alt);
    const double gap = other.converged ? xt_norm(theta - other.solution(), ctx.config) : kInfinity;
    const bool unique = gap <= 10.0 * tol;
    r.details.push_back("norm / (2 eta) = " + g6(res.eta > 0 ? norm / (2.0 * res.eta) : 0.0));
    r.details.push_back("distance to run started at 1.5 x linear part " + g6(gap));
    r.status = worst(r.status, hard(ball && unique));
  }
  if (ctx.config.n_time() >= 3) {
    r.details.push_back("strong-form residual " + g6(pde_residual(theta, ctx.forcing, ctx.config)));
  }

  // Norm series with cumulative modular of the time norm.
  TimeSeries ts{"theta_norms", {"t", "lp_norm", "partial_modular"}, {}};
  const std::vector<double> series = norm_series(theta, ctx.config.p());
  const std::vector<double> w = ctx.config.time().weights();
  double acc = 0.0;
  for (int i = 0; i < theta.size(); ++i) {
    if (norm > 0.0) acc += w[i] * std::pow(series[i] / norm, ctx.config.q()[i]);
    ts.rows.push_back({ctx.config.time().node(i), series[i], acc});
  }
  ctx.results.series.push_back(std::move(ts));
  ctx.results.fields.push_back({"theta_final", theta[theta.size() - 1]});
}

void check_estimates(CheckResult& r, RunContext& ctx) {
  const double T = ctx.config.final_time();
  const EstimateReport est =
      estimate_suite(ctx.config, default_estimate_family(), {0.25 * T, 0.5 * T, T});
  TimeSeries ts{"estimates", {"T", "linear_ratio", "forcing_ratio", "bilinear_ratio", "forcing_lq"}, {}};
  for (const EstimateRow& row : est.rows) {
    ts.rows.push_back({row.T, row.linear_ratio, row.forcing_ratio, row.bilinear_ratio, row.forcing_lq});
  }
  ctx.results.series.push_back(std::move(ts));
  r.status = CheckStatus::pass;
  r.details.push_back("C1 max " + g6(est.c1_max) + ", fit " + g6(est.c1_fit));
  r.details.push_back("C2 max " + g6(est.c2_max) + ", fit " + g6(est.c2_fit));
  for (const std::string& n : est.notes) r.details.push_back("note: " + n);
  const auto bilinear = [&ctx](const Grid2D& g) {
    const SolverConfig cfg = ctx.config.with_grid(g);
    return estimate_suite(cfg, default_estimate_family(), {cfg.final_time()}).c2_max;
  };
  stability_line(r, ctx, "bilinear", bilinear);
}

void check_regularity(CheckResult& r, RunContext& ctx, const CheckSpec& spec) {
  const MultiIndex beta(static_cast<int>(check_param(spec, "b1", 1)),
                        static_cast<int>(check_param(spec, "b2", 1)));
  const PicardResult& res = ctx.solve();
  if (!res.converged) {
    r.status = CheckStatus::fail;
    r.details.push_back("Picard iteration did not converge; regularity not evaluated");
    return;
  }
  const RegularityReport rep = regularity_report(res, ctx.theta0, beta, ctx.forcing, ctx.config);
  const double dist = rep.max_distance();
  r.status = hard(rep.all_finite() && rep.all_bounded() && dist <= 1e-5);
  for (const DerivativeRow& row : rep.rows) {
    r.details.push_back("gamma " + row.gamma.to_string() + ": norm " + g6(row.direct_norm) +
                        ", 2 eta " + g6(2.0 * row.eta) + ", distance " + g6(row.distance) +
                        (row.bounded ? "" : " (bound violated)"));
  }
}

void check_scaling(CheckResult& r, RunContext& ctx, const CheckSpec& spec) {
  const int lambda = static_cast<int>(check_param(spec, "lambda", 2));
  const double contrast = check_param(spec, "contrast", 2.0);
  const ScalarField bump = centered_gaussian(ctx.grid, ctx.grid.box_side() / 16.0);
  const ScalingReport rep = scaling_check(bump, lambda, ctx.config.alpha(), contrast);
  const bool ok = std::abs(rep.critical_ratio - 1.0) <= 0.01 &&
                  std::abs(rep.contrast_ratio - rep.contrast_expected) <= 0.01;
  r.status = hard(ok);
  r.details.push_back("lambda " + std::to_string(lambda) + ", critical exponent " +
                      g6(rep.critical_exponent) + ": ratio " + fmt("%.10f", rep.critical_ratio));
  r.details.push_back("contrast exponent " + g6(contrast) + ": ratio " +
                      fmt("%.10f", rep.contrast_ratio) + " vs " + fmt("%.10f", rep.contrast_expected));
}

void validate_checks(const Scenario& s) {
  for (const CheckSpec& c : s.checks) {
    if (c.id == "regularity") {
      const double b1 = check_param(c, "b1", 1);
      const double b2 = check_param(c, "b2", 1);
      if (b1 != std::floor(b1) || b2 != std::floor(b2)) {
        throw ConfigError("regularity: b1 and b2 must be integers");
      }
      MultiIndex(static_cast<int>(b1), static_cast<int>(b2));
    } else if (c.id == "scaling") {
      const double lambda = check_param(c, "lambda", 2);
      if (lambda < 1 || lambda != std::floor(lambda)) {
        throw ConfigError("scaling: lambda must be a positive integer");
      }
      const double a = s.solver.alpha;
      if (2.0 / (a - 1.0) > 64.0) {
        throw ConfigError("scaling: critical exponent 2/(alpha-1) exceeds 64");
      }
    } else if (c.id == "norm_axioms") {
      if (check_param(c, "pairs", 12) < 1) throw ConfigError("norm_axioms: pairs must be >= 1");
    }
  }
}

}  // namespace

DataSpec DataSpec::parse(const std::string& text) {
  DataSpec spec;
  const std::string t = trim(text);
  if (t.empty() || t == "zero") return spec;
  for (const std::string& part : split(t, '+')) {
    auto [kind, params] = parse_call(part);
    const auto it = generator_params().find(kind);
    if (it == generator_params().end()) throw ConfigError("unknown generator '" + kind + "'");
    for (const auto& [k, v] : params) {
      if (!it->second.count(k)) {
        throw ConfigError("generator '" + kind + "' has no parameter '" + k + "'");
      }
      if (k == "kind") {
        if (v != "sin" && v != "cos") throw ConfigError("mode kind must be sin or cos");
      } else {
        parse_double(v, kind + "." + k);
      }
    }
    spec.terms.push_back({kind, params});
  }
  return spec;
}

std::string DataSpec::to_string() const {
  if (terms.empty()) return "zero";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i].kind;
    char sep = ':';
    for (const auto& [k, v] : terms[i].params) {
      out += sep + k + "=" + v;
      sep = ',';
    }
  }
  return out;
}

ScalarField DataSpec::build(const Grid2D& grid, std::uint64_t scenario_seed) const {
  ScalarField out(grid);
  const double L = grid.box_side();
  for (const GeneratorTerm& t : terms) {
    const auto num = [&](const std::string& k, double fallback) {
      const auto it = t.params.find(k);
      return it == t.params.end() ? fallback : parse_double(it->second, t.kind + "." + k);
    };
    const double amp = num("amp", 1.0);
    if (t.kind == "mode") {
      const auto k1 = parse_integer(param_or(t.params, "k1", "1"), "mode.k1");
      const auto k2 = parse_integer(param_or(t.params, "k2", "0"), "mode.k2");
      const ModeKind kind = param_or(t.params, "kind", "cos") == "sin" ? ModeKind::sine : ModeKind::cosine;
      out += single_mode(grid, static_cast<int>(k1), static_cast<int>(k2), kind, amp);
    } else if (t.kind == "gaussian") {
      out += gaussian_bump(grid, num("c1", 0.5) * L, num("c2", 0.5) * L, num("width", 0.0625) * L, amp);
    } else if (t.kind == "dog") {
      out += difference_of_gaussians(grid, num("width", 0.0625) * L, amp);
    } else if (t.kind == "random") {
      const auto seed = t.params.count("seed") ? parse_integer(t.params.at("seed"), "random.seed")
                                               : static_cast<long long>(scenario_seed);
      const auto band = parse_integer(param_or(t.params, "band", "4"), "random.band");
      if (band < 1) throw ConfigError("random.band must be >= 1");
      out += random_bandlimited(grid, static_cast<std::uint64_t>(seed), static_cast<int>(band), amp);
    }
  }
  return out;
}

std::string CheckSpec::to_string() const {
  std::string out = id;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep + k + "=" + g6(v);
    sep = ',';
  }
  return out;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids{
      "decay_slopes", "norm_axioms",     "holder", "duality",   "embedding", "maximal",
      "riesz_potential", "picard",       "estimates", "regularity", "scaling"};
  return ids;
}

double Scenario::side() const { return box_side > 0.0 ? box_side : 2.0 * std::numbers::pi; }

Scenario parse_scenario(const std::string& text, const std::string& default_name) {
  Scenario s;
  s.name = default_name;
  std::set<std::string> seen;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(where + ": duplicate key '" + key + "'");
    const std::string what = where + " (" + key + ")";
    if (key == "name") {
      s.name = value;
    } else if (key == "grid") {
      s.grid_points = static_cast<int>(parse_integer(value, what));
    } else if (key == "box") {
      s.box_side = parse_double(value, what);
      if (!(s.box_side > 0.0)) throw ConfigError(what + ": box side must be positive");
    } else if (key == "alpha") {
      s.solver.alpha = parse_double(value, what);
    } else if (key == "mu") {
      s.solver.mu = parse_double(value, what);
    } else if (key == "T") {
      s.solver.T = parse_double(value, what);
    } else if (key == "n_time") {
      s.solver.n_time = static_cast<int>(parse_integer(value, what));
    } else if (key == "p") {
      s.solver.p = parse_double(value, what);
    } else if (key == "q") {
      s.solver.q = ExponentFamily::parse(value);
    } else if (key == "p_bar") {
      s.solver.p_bar = ExponentFamily::parse(value);
    } else if (key == "dealias") {
      s.solver.dealias = parse_bool(value, what);
    } else if (key == "picard_tol") {
      s.solver.picard_tol = parse_double(value, what);
    } else if (key == "picard_max_iter") {
      s.solver.picard_max_iter = static_cast<int>(parse_integer(value, what));
    } else if (key == "relax_q_minus") {
      s.solver.relax_q_minus = parse_bool(value, what);
    } else if (key == "seed") {
      const long long seed = parse_integer(value, what);
      if (seed < 0) throw ConfigError(what + ": seed must be non-negative");
      s.seed = static_cast<std::uint64_t>(seed);
    } else if (key == "theta0") {
      s.theta0 = DataSpec::parse(value);
    } else if (key == "forcing") {
      s.forcing = DataSpec::parse(value);
    } else if (key == "project_mean") {
      s.project_mean = parse_bool(value, what);
    } else if (key == "strict") {
      s.strict = parse_bool(value, what);
    } else if (key == "checks") {
      std::istringstream cs(value);
      std::string tok;
      while (cs >> tok) {
        auto [id, params] = parse_call(tok);
        const auto it = check_params().find(id);
        if (it == check_params().end()) throw ConfigError(what + ": unknown check '" + id + "'");
        CheckSpec c;
        c.id = id;
        for (const auto& [k, v] : params) {
          if (!it->second.count(k)) {
            throw ConfigError(what + ": check '" + id + "' has no parameter '" + k + "'");
          }
          c.params[k] = parse_double(v, what + " " + id + "." + k);
        }
        s.checks.push_back(std::move(c));
      }
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot read scenario file " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  std::string stem = path;
  const auto slash = stem.find_last_of('/');
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  const auto dot = stem.find_last_of('.');
  if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_scenario(buf.str(), stem);
}

void apply_overrides(Scenario& s, const RunOverrides& o) {
  if (o.grid_points) s.grid_points = *o.grid_points;
  if (o.seed) s.seed = *o.seed;
  if (o.project_mean) s.project_mean = true;
  if (o.strict) s.strict = true;
}

RunOutcome run_scenario(const Scenario& s) {
  RunOutcome out;
  out.results.scenario = s.name;
  std::optional<RunContext> ctx;
  try {
    validate_checks(s);
    const Grid2D grid(s.grid_points, s.side());
    const SolverConfig config(grid, s.solver);
    ScalarField theta0 = s.theta0.build(grid, s.seed);
    ScalarField f = s.forcing.build(grid, s.seed);
    if (s.project_mean) {
      theta0 = project_mean(std::move(theta0));
      f = project_mean(std::move(f));
    }
    if (!theta0.is_mean_zero()) {
      throw ConfigError("initial data is not mean-zero (enable project_mean)");
    }
    if (!f.is_mean_zero()) throw ConfigError("forcing is not mean-zero (enable project_mean)");
    ctx.emplace(RunContext{s, grid, config, theta0, Trajectory::constant(f, config.time()),
                           out.results, std::nullopt, std::nullopt});
    for (const std::string& note : config.notes()) out.results.header.push_back("note: " + note);
  } catch (const Error& e) {
    out.exit_code = kExitConfigError;
    out.diagnostic = e.what();
    return out;
  }

  RunResults& res = out.results;
  const SolverParams& p = s.solver;
  res.header.push_back("grid " + std::to_string(s.grid_points) + ", box " + g6(s.side()) +
                       ", seed " + std::to_string(s.seed));
  res.header.push_back("alpha " + g6(p.alpha) + ", p " + g6(p.p) + ", q " + p.q.to_string() +
                       ", p_bar " + p.p_bar.to_string());
  res.header.push_back("T " + g6(p.T) + ", n_time " + std::to_string(p.n_time) + ", dealias " +
                       (p.dealias ? "true" : "false") + ", picard_tol " + g6(p.picard_tol));
  res.header.push_back("theta0 " + s.theta0.to_string());
  res.header.push_back("forcing " + s.forcing.to_string());
  res.fields.push_back({"theta0", ctx->theta0});

  for (const std::string& id : known_checks()) {
    for (const CheckSpec& spec : s.checks) {
      if (spec.id != id) continue;
      CheckResult r;
      r.id = spec.params.empty() ? id : spec.to_string();
      r.anchor = anchors().at(id);
      try {
        if (id == "decay_slopes") check_decay(r, *ctx);
        else if (id == "norm_axioms") check_norm_axioms(r, *ctx, spec);
        else if (id == "holder") check_holder(r, *ctx);
        else if (id == "duality") check_duality(r, *ctx);
        else if (id == "embedding") check_embedding(r, *ctx);
        else if (id == "maximal") check_maximal(r, *ctx);
        else if (id == "riesz_potential") check_riesz_potential(r, *ctx);
        else if (id == "picard") check_picard(r, *ctx);
        else if (id == "estimates") check_estimates(r, *ctx);
        else if (id == "regularity") check_regularity(r, *ctx, spec);
        else if (id == "scaling") check_scaling(r, *ctx, spec);
      } catch (const Error& e) {
        r.status = CheckStatus::fail;
        r.details.push_back(std::string("error: ") + e.what());
      }
      const bool failing =
          r.status == CheckStatus::fail || (s.strict && r.status == CheckStatus::warn);
      if (failing) out.exit_code = kExitCheckFailure;
      res.checks.push_back(std::move(r));
    }
  }
  return out;
}

RunOutcome run_scenario_to(const Scenario& s, const std::string& out_dir) {
  RunOutcome out = run_scenario(s);
  if (out.exit_code == kExitConfigError) return out;
  try {
    emit_report(out.results, out_dir);
  } catch (const IoError& e) {
    out.exit_code = kExitIoError;
    out.diagnostic = e.what();
  }
  return out;
}

}  // namespace sqg
