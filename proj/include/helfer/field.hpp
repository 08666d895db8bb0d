#pragma once

#include <vector>

#include "helfer/grid.hpp"
#include "helfer/params.hpp"

namespace helfer {

//! One spacetime evaluation of the closed-form state observables.
//! rho = rho1 + rho2 exactly; rho1 >= 0; flux vanishes at t = 0 and r = 0.
struct FieldSample {
  double r = 0.0;
  double t = 0.0;
  double rho1 = 0.0;
  double rho2 = 0.0;
  double rho = 0.0;
  double flux = 0.0;
};

//! rho1 = (2 chi0^2 N^2 / pi^2) f1(p0,r) ln(lambda/(q p0)).
//! Varies only on timescales ~1/p0 and is treated as time independent.
double rho1(const HelferParams& p, double r);

//! rho2 = -(chi0 N^2 / 6 pi^2) f2(p0,r) int_{q p0}^{lambda} dw cos(2wt)/w.
//! The omega integral is Ci(2 lambda |t|) - Ci(2 q p0 |t|) for t != 0 and
//! ln(lambda/(q p0)) at t = 0. Even in t by construction.
double rho2(const HelferParams& p, double r, double t);

//! rho1 + rho2.
double rho_total(const HelferParams& p, double r, double t);

//! Radial energy flux
//!   F = -(chi0 N^2 / 6 pi^2) g2(p0,r) [cos(2 lambda t) - cos(2 q p0 t)]/t,
//! odd in t (exactly, by construction), zero at t = 0 and at r = 0.
//! A 3-term Taylor form replaces the quotient when both cosine arguments
//! are below 1e-4. Valid for |t| < 0.1/p0; at longer times the neglected
//! slow components of the flux are not small.
double flux(const HelferParams& p, double r, double t);

FieldSample field_sample(const HelferParams& p, double r, double t);

//! Row-major samples over r_grid x t_grid (r outer, t inner).
//! threads: -1 = all available, 0 = serial reference path, k > 0 = k
//! OpenMP workers; the output is identical for every choice.
//! Warns once on std::cerr when the t grid extends past 0.1/p0.
std::vector<FieldSample> field_grid(const HelferParams& p,
                                    const GridSpec& r_grid,
                                    const GridSpec& t_grid, int threads = -1);

}  // namespace helfer
