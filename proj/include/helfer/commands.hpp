#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "helfer/config.hpp"
#include "helfer/oracle.hpp"
#include "helfer/vacuum.hpp"

namespace helfer {

//! Command entry points shared by the CLI and the test suites.
//! Each returns a process exit status: 0 success, 1 a physics check
//! failed. Usage/config errors surface as exceptions (exit code 2 in the
//! CLI). All outputs are byte-deterministic for a fixed config and seed.

//! Writes fig1.csv .. fig7.csv figure datasets plus manifest.json into
//! the output directory.
int cmd_figures(const RunConfig& config);

//! Runs the Monte Carlo shell validations against the closed forms and
//! writes validate.json. threads as in the oracle calls.
int cmd_validate(const RunConfig& config, const ShellSpec& shell,
                 std::uint64_t n, int threads = -1);

//! Lorentzian-sampled QI margins on a tau grid plus a sharp-window
//! positivity summary; writes qi.csv.
int cmd_qi(const RunConfig& config, double r, const GridSpec& tau_grid,
           double bound_const);

//! Correlator sweep over grid_a x grid_b; writes corr.csv. Grids touching
//! the light-cone band are rejected listing the offending indices. With
//! fit = true and one singleton grid, appends the fitted falloff exponent.
int cmd_corr(const RunConfig& config, CorrKind kind, const GridSpec& grid_a,
             const GridSpec& grid_b, bool fit);

//! Field samples over an (r, t) grid; writes density.csv.
int cmd_density(const RunConfig& config, const GridSpec& r_grid,
                const GridSpec& t_grid);

}  // namespace helfer
