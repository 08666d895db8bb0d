#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "helfer/commands.hpp"
#include "helfer/qi.hpp"
#include "helfer/version.hpp"

namespace {

helfer::RunConfig load_or_default(const std::string& config_path,
                                  const std::string& out_override,
                                  std::optional<std::uint64_t> seed_override) {
  helfer::RunConfig cfg = config_path.empty()
                              ? helfer::default_config()
                              : helfer::load_config(config_path);
  if (!out_override.empty()) cfg.output_dir = out_override;
  if (seed_override) cfg.seed = *seed_override;
  return cfg;
}

helfer::GridSpec named_grid(const helfer::RunConfig& cfg,
                            const std::string& name) {
  const auto it = cfg.grids.find(name);
  if (it == cfg.grids.end()) {
    throw std::invalid_argument("no grid named \"" + name +
                                "\" in the config");
  }
  return it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helfer-state energy density, flux, QI checks and vacuum "
               "correlators"};
  app.set_version_flag("--version", helfer::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "JSON run configuration")
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory override");
  app.add_option("--seed", seed, "seed override");

  auto* figures = app.add_subcommand("figures", "write figure datasets");

  auto* validate =
      app.add_subcommand("validate", "Monte Carlo shell validation");
  std::vector<double> shell_args{50.0, 500.0};
  std::uint64_t samples = 10'000'000;
  int threads = -1;
  validate->add_option("--shell", shell_args, "shell cutoffs LO HI")
      ->expected(2);
  validate->add_option("--samples", samples, "samples per estimate");
  validate->add_option("--threads", threads,
                       "workers (-1 all, 0 serial reference)");

  auto* qi = app.add_subcommand("qi", "quantum-inequality margins");
  double qi_r = 0.0;
  double bound_const = helfer::kLorentzianBoundConst;
  std::string tau_grid_name;
  qi->add_option("--r", qi_r, "worldline radius");
  qi->add_option("--bound-const", bound_const,
                 "QI bound constant (bound = -c/tau^4)");
  qi->add_option("--tau-grid", tau_grid_name, "named tau grid from config");

  auto* corr = app.add_subcommand("corr", "vacuum correlator sweep");
  std::string mode = "2d";
  std::string grid_a_name, grid_b_name;
  double fix_a = 0.0, fix_b = 0.0;
  bool has_fix_a = false, has_fix_b = false, do_fit = false;
  corr->add_option("--mode", mode, "2d or 4d")
      ->check(CLI::IsMember({"2d", "4d"}));
  corr->add_option("--grid-a", grid_a_name, "named grid for x / r");
  corr->add_option("--grid-b", grid_b_name, "named grid for t' / dt");
  corr->add_option("--fix-a", fix_a, "pin x / r to one value")
      ->each([&](const std::string&) { has_fix_a = true; });
  corr->add_option("--fix-b", fix_b, "pin t' / dt to one value")
      ->each([&](const std::string&) { has_fix_b = true; });
  corr->add_flag("--fit", do_fit, "fit the falloff exponent");

  auto* density = app.add_subcommand("density", "field samples on a grid");
  std::string grid_r_name = "r", grid_t_name = "t";
  density->add_option("--grid-r", grid_r_name, "named r grid from config");
  density->add_option("--grid-t", grid_t_name, "named t grid from config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const helfer::RunConfig cfg =
        load_or_default(config_path, out_dir, seed);
    if (*figures) {
      return helfer::cmd_figures(cfg);
    }
    if (*validate) {
      const helfer::ShellSpec shell{shell_args[0], shell_args[1]};
      return helfer::cmd_validate(cfg, shell, samples, threads);
    }
    if (*qi) {
      const helfer::GridSpec tau_grid =
          tau_grid_name.empty() ? helfer::log_grid(1e-3, 10.0, 64)
                                : named_grid(cfg, tau_grid_name);
      return helfer::cmd_qi(cfg, qi_r, tau_grid, bound_const);
    }
    if (*corr) {
      const helfer::CorrKind kind =
          mode == "2d" ? helfer::CorrKind::two_d : helfer::CorrKind::four_d;
      const helfer::GridSpec ga = has_fix_a ? helfer::singleton_grid(fix_a)
                                            : named_grid(cfg, grid_a_name);
      const helfer::GridSpec gb = has_fix_b ? helfer::singleton_grid(fix_b)
                                            : named_grid(cfg, grid_b_name);
      return helfer::cmd_corr(cfg, kind, ga, gb, do_fit);
    }
    if (*density) {
      return helfer::cmd_density(cfg, named_grid(cfg, grid_r_name),
                                 named_grid(cfg, grid_t_name));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
