#include "helfer/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "helfer/csv.hpp"
#include "helfer/field.hpp"
#include "helfer/qi.hpp"
#include "helfer/version.hpp"
#include "json.hpp"

namespace helfer {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string params_comment(const HelferParams& p, std::uint64_t seed) {
  std::ostringstream os;
  os << "lambda=" << format_double(p.lambda) << " p0=" << format_double(p.p0)
     << " q=" << format_double(p.q) << " chi0=" << format_double(p.chi0)
     << " n_norm=" << format_double(p.n_norm) << " seed=" << seed;
  return os.str();
}

json params_json(const HelferParams& p) {
  return json{{"lambda", p.lambda},
              {"p0", p.p0},
              {"q", p.q},
              {"chi0", p.chi0},
              {"n_norm", p.n_norm}};
}

GridSpec grid_or(const RunConfig& config, const std::string& name,
                 const GridSpec& fallback) {
  const auto it = config.grids.find(name);
  return it == config.grids.end() ? fallback : it->second;
}

void write_json(const json& j, const fs::path& path) {
  std::ofstream out(path, std::ios::out | std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << j.dump(2) << "\n";
}

}  // namespace

int cmd_figures(const RunConfig& config) {
  const fs::path dir(config.output_dir);
  fs::create_directories(dir);
  const double p0 = config.p0;
  const double q = config.q;
  const auto chi0 = config.chi0;

  // caption cutoffs; config.lambda only seeds the manifest params entry
  const HelferParams par100 = make_params(100.0, p0, q, chi0);
  const HelferParams par300 = make_params(300.0, p0, q, chi0);
  const HelferParams par1000 = make_params(1000.0, p0, q, chi0);

  const GridSpec r_grid = grid_or(config, "fig_r", linear_grid(0.0, 10.0, 256));
  const GridSpec t_grid =
      grid_or(config, "fig_t", linear_grid(-0.1, 0.1, 401));
  const std::vector<double> rs = grid_points(r_grid);
  const std::vector<double> ts = grid_points(t_grid);

  {
    CsvWriter csv((dir / "fig1.csv").string());
    csv.columns({"r", "rho_lambda100", "rho_lambda300", "rho_lambda1000"});
    csv.comment("rho = rho1 + rho2 at t=0 for lambda in {100, 300, 1000}");
    csv.comment(params_comment(par1000, config.seed));
    for (const double r : rs) {
      csv.row({r, rho_total(par100, r, 0.0), rho_total(par300, r, 0.0),
               rho_total(par1000, r, 0.0)});
    }
  }
  {
    CsvWriter csv((dir / "fig2.csv").string());
    csv.columns({"r", "rho_t0", "rho_t0.005", "rho_t0.05"});
    csv.comment("rho vs r at t in {0, 0.005, 0.05}, lambda=1000");
    csv.comment(params_comment(par1000, config.seed));
    for (const double r : rs) {
      csv.row({r, rho_total(par1000, r, 0.0), rho_total(par1000, r, 0.005),
               rho_total(par1000, r, 0.05)});
    }
  }
  const double r_fix = 2.0;
  {
    CsvWriter csv((dir / "fig3.csv").string());
    csv.columns({"t", "rho", "rho_x50", "flux"});
    csv.comment("rho and F vs t at r=2, lambda=100; rho_x50 is the display "
                "scaling. Flux valid for |t| < 0.1/p0.");
    csv.comment(params_comment(par100, config.seed));
    for (const double t : ts) {
      const double rho = rho_total(par100, r_fix, t);
      csv.row({t, rho, 50.0 * rho, flux(par100, r_fix, t)});
    }
  }
  {
    CsvWriter csv((dir / "fig4.csv").string());
    csv.columns({"t", "rho", "rho_x300", "flux"});
    csv.comment("rho and F vs t at r=2, lambda=1000; rho_x300 is the display "
                "scaling. Flux valid for |t| < 0.1/p0.");
    csv.comment(params_comment(par1000, config.seed));
    for (const double t : ts) {
      const double rho = rho_total(par1000, r_fix, t);
      csv.row({t, rho, 300.0 * rho, flux(par1000, r_fix, t)});
    }
  }
  {
    CsvWriter csv((dir / "fig5.csv").string());
    csv.columns({"x", "tprime", "c", "label"});
    csv.comment("2D vacuum energy-density/flux correlator sign map");
    csv.comment(params_comment(par1000, config.seed));
    for (const double x : grid_points(linear_grid(-2.0, 2.0, 41))) {
      for (const double tp : grid_points(linear_grid(-2.0, 2.0, 41))) {
        const CorrSample s = corr2d(x, tp);
        csv.row({x, tp, s.c_value}, to_string(s.label));
      }
    }
  }
  {
    CsvWriter csv((dir / "fig7.csv").string());
    csv.columns({"r", "dt", "c", "label"});
    csv.comment("4D vacuum energy-density/flux correlator sign map");
    csv.comment(params_comment(par1000, config.seed));
    for (const double r : grid_points(linear_grid(0.05, 2.0, 40))) {
      for (const double dt : grid_points(linear_grid(-2.0, 2.0, 41))) {
        const CorrSample s = corr4d(r, dt);
        csv.row({r, dt, s.c_value}, to_string(s.label));
      }
    }
  }

  json manifest{
      {"version", kVersion},
      {"command", "figures"},
      {"params", params_json(config.params())},
      {"figure_lambdas", {100.0, 300.0, 1000.0}},
      {"seed", config.seed},
      {"r_grid", {{"min", r_grid.min}, {"max", r_grid.max}, {"count", r_grid.count}}},
      {"t_grid", {{"min", t_grid.min}, {"max", t_grid.max}, {"count", t_grid.count}}},
      {"files",
       {"fig1.csv", "fig2.csv", "fig3.csv", "fig4.csv", "fig5.csv",
        "fig7.csv"}},
  };
  write_json(manifest, dir / "manifest.json");
  return 0;
}

int cmd_validate(const RunConfig& config, const ShellSpec& shell,
                 std::uint64_t n, int threads) {
  const fs::path dir(config.output_dir);
  fs::create_directories(dir);
  const HelferParams p = config.params();
  const double r_probe = 1.0 / p.p0;
  const double t_probe = 0.25 / shell.lambda_lo;
  const std::uint64_t seed = config.seed;

  struct Check {
    std::string name;
    MCEstimate est;
    double target;
    double tol;  // pass iff |mean - target| <= tol
  };
  std::vector<Check> checks;

  auto tol_for = [](const MCEstimate& e, double target, double floor_frac) {
    return std::max(3.0 * e.std_error, floor_frac * std::abs(target));
  };

  {
    const MCEstimate e = mc_rho2_shell(p, shell, 0.0, 0.0, n, seed + 1, threads);
    const double tgt = closed_rho2_shell(p, shell, 0.0, 0.0);
    checks.push_back({"rho2_shell_r0", e, tgt, tol_for(e, tgt, 0.03)});
  }
  {
    const MCEstimate e =
        mc_rho2_shell(p, shell, r_probe, 0.0, n, seed + 2, threads);
    const double tgt = closed_rho2_shell(p, shell, r_probe, 0.0);
    checks.push_back({"rho2_shell_r1", e, tgt, tol_for(e, tgt, 0.03)});
  }
  {
    const MCEstimate e = mc_rho1_shell(p, shell, 0.0, n, seed + 3, threads);
    const double tgt = closed_rho1_shell(p, shell, 0.0);
    checks.push_back({"rho1_shell_r0", e, tgt, tol_for(e, tgt, 0.05)});
  }
  {
    const MCEstimate e = mc_rho1_shell(p, shell, r_probe, n, seed + 4, threads);
    const double tgt = closed_rho1_shell(p, shell, r_probe);
    checks.push_back({"rho1_shell_r1", e, tgt, tol_for(e, tgt, 0.05)});
  }
  {
    const MCEstimate e =
        mc_flux_shell(p, shell, r_probe, 0.0, n, seed + 5, threads);
    checks.push_back({"i2_shell_t0", e, 0.0, 3.0 * e.std_error});
  }
  {
    const MCEstimate e =
        mc_flux_shell(p, shell, r_probe, t_probe, n, seed + 6, threads);
    const double tgt = closed_i2_shell(p, shell, r_probe, t_probe);
    checks.push_back({"i2_shell_t", e, tgt, tol_for(e, tgt, 0.05)});
  }
  {
    const MCEstimate e = mc_i1_t0(p, r_probe, n, seed + 7, threads);
    checks.push_back({"i1_t0", e, 0.0, 3.0 * e.std_error});
  }

  bool all_pass = true;
  json jchecks = json::array();
  for (const Check& c : checks) {
    const double err = std::abs(c.est.mean - c.target);
    const bool pass = err <= c.tol;
    all_pass = all_pass && pass;
    jchecks.push_back(json{{"name", c.name},
                           {"mean", c.est.mean},
                           {"std_error", c.est.std_error},
                           {"imag_mean", c.est.imag_mean},
                           {"n", c.est.n_samples},
                           {"seed", c.est.seed},
                           {"target", c.target},
                           {"abs_error", err},
                           {"tolerance", c.tol},
                           {"pass", pass}});
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.name
              << ": mean=" << format_double(c.est.mean)
              << " target=" << format_double(c.target)
              << " tol=" << format_double(c.tol) << "\n";
  }

  const json report{{"version", kVersion},
                    {"command", "validate"},
                    {"params", params_json(p)},
                    {"seed", seed},
                    {"shell", {shell.lambda_lo, shell.lambda_hi}},
                    {"n", n},
                    {"checks", jchecks},
                    {"all_pass", all_pass}};
  write_json(report, dir / "validate.json");
  return all_pass ? 0 : 1;
}

int cmd_qi(const RunConfig& config, double r, const GridSpec& tau_grid,
           double bound_const) {
  const fs::path dir(config.output_dir);
  fs::create_directories(dir);
  const HelferParams p = config.params();
  const std::vector<QIReport> rows = qi_margin(p, r, tau_grid, bound_const);
  const PositivityHorizon ph = positivity_horizon(p, r, 1e4 / p.omega_lo(), 512);

  bool all_pass = true;
  CsvWriter csv((dir / "qi.csv").string());
  csv.columns({"tau", "averaged_rho", "bound_value", "margin", "passed"});
  csv.comment("Lorentzian-sampled QI margin at r=" + format_double(r) +
              ", bound_const=" + format_double(bound_const) +
              " (bound constant is an external input)");
  csv.comment(params_comment(p, config.seed));
  for (const QIReport& rep : rows) {
    csv.row({rep.tau_or_t, rep.averaged_rho, rep.bound_value, rep.margin,
             rep.passed ? 1.0 : 0.0});
    all_pass = all_pass && rep.passed;
  }
  std::ostringstream summary;
  summary << "summary: " << rows.size() << " widths, "
          << (all_pass ? "all passed" : "FAILURES present")
          << "; window integral sign changes=" << ph.sign_changes;
  if (ph.t_star) {
    summary << " t_star=" << format_double(*ph.t_star);
  } else {
    summary << " t_star=none";
  }
  summary << " positive_beyond=" << (ph.all_positive_beyond ? "yes" : "no");
  csv.comment(summary.str());
  std::cout << summary.str() << "\n";
  return all_pass ? 0 : 1;
}

int cmd_corr(const RunConfig& config, CorrKind kind, const GridSpec& grid_a,
             const GridSpec& grid_b, bool fit) {
  const fs::path dir(config.output_dir);
  fs::create_directories(dir);
  const std::vector<double> as = grid_points(grid_a);
  const std::vector<double> bs = grid_points(grid_b);

  // the sweep must avoid the light-cone band entirely
  std::vector<std::pair<int, int>> offending;
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (std::abs(as[i] * as[i] - bs[j] * bs[j]) < kLightconeEps) {
        offending.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  if (!offending.empty()) {
    std::ostringstream os;
    os << "cmd_corr: grid touches the light-cone band at indices";
    for (std::size_t k = 0; k < offending.size() && k < 8; ++k) {
      os << " (" << offending[k].first << "," << offending[k].second << ")";
    }
    if (offending.size() > 8) os << " ...";
    throw std::invalid_argument(os.str());
  }

  CsvWriter csv((dir / "corr.csv").string());
  csv.columns({kind == CorrKind::two_d ? "x" : "r",
               kind == CorrKind::two_d ? "tprime" : "dt", "c", "label"});
  csv.comment(kind == CorrKind::two_d
                  ? "2D vacuum correlator C = -x t' (x^2+t'^2) [G''(sigma)]^2"
                  : "4D vacuum correlator C = r dt (r^2+dt^2) [G''(sigma)]^2");
  csv.comment(params_comment(config.params(), config.seed));
  for (const double a : as) {
    for (const double b : bs) {
      const CorrSample s =
          kind == CorrKind::two_d ? corr2d(a, b) : corr4d(a, b);
      csv.row({a, b, s.c_value}, to_string(s.label));
    }
  }

  if (fit) {
    if ((grid_a.count == 1) == (grid_b.count == 1)) {
      throw std::invalid_argument(
          "cmd_corr: --fit needs exactly one singleton grid");
    }
    const bool vary_a = grid_b.count == 1;
    const double fixed = vary_a ? bs.front() : as.front();
    const GridSpec& range = vary_a ? grid_a : grid_b;
    const double slope = falloff_exponent(
        kind, vary_a ? VaryAxis::a : VaryAxis::b, fixed, range);
    csv.comment("falloff_exponent=" + format_double(slope));
    std::cout << "falloff_exponent=" << format_double(slope) << "\n";
  }
  return 0;
}

int cmd_density(const RunConfig& config, const GridSpec& r_grid,
                const GridSpec& t_grid) {
  const fs::path dir(config.output_dir);
  fs::create_directories(dir);
  const HelferParams p = config.params();
  const std::vector<FieldSample> samples = field_grid(p, r_grid, t_grid);

  CsvWriter csv((dir / "density.csv").string());
  csv.columns({"r", "t", "rho1", "rho2", "rho", "flux"});
  csv.comment("closed-form field samples; flux valid for |t| < 0.1/p0");
  csv.comment(params_comment(p, config.seed));
  for (const FieldSample& s : samples) {
    csv.row({s.r, s.t, s.rho1, s.rho2, s.rho, s.flux});
  }
  return 0;
}

}  // namespace helfer
