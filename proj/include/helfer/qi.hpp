#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "helfer/grid.hpp"
#include "helfer/params.hpp"

namespace helfer {

//! One sampled-worldline check at radius r and width tau.
struct QIReport {
  double r = 0.0;
  double tau_or_t = 0.0;     // sampling width tau (length units)
  double averaged_rho = 0.0;
  double bound_value = 0.0;  // QI lower bound at this width (negative)
  double margin = 0.0;       // averaged_rho - bound_value
  bool passed = false;       // margin >= 0
};

//! Standard Lorentzian-sampling bound constant for a massless minimally
//! coupled scalar in four dimensions. External input, not derived here;
//! configurable wherever it is used.
inline constexpr double kLorentzianBoundConst =
    3.0 / (32.0 * std::numbers::pi * std::numbers::pi);

//! Time average of rho along the static worldline at radius r against the
//! normalized Lorentzian tau/(pi (t^2 + tau^2)). The weight integrates
//! cos(2wt) to e^(-2w tau), so the omega integral reduces exactly to
//!   rho1(r) - (chi0 N^2/6 pi^2) f2(p0,r) [E1(2 q p0 tau) - E1(2 lambda tau)].
double lorentzian_average(const HelferParams& p, double r, double tau);

//! Sharp-window integral W(T) = int_{-T}^{T} rho dt, evaluated exactly:
//!   W = 2T rho1 - (chi0 N^2/6 pi^2) f2 [sin(2 q p0 T)/(q p0)
//!       - sin(2 lambda T)/lambda + 2T (Ci(2 lambda T) - Ci(2 q p0 T))].
double window_integral(const HelferParams& p, double r, double T);

struct PositivityHorizon {
  std::optional<double> t_star;   // largest zero crossing of W, if any
  bool all_positive_beyond = false;  // W >= 0 at every grid T past t_star
  int sign_changes = 0;
};

//! Scans W on a log grid of grid_n points from 1e-2/lambda to t_max,
//! bisects the largest bracketed crossing, and reports whether W stays
//! nonnegative past it. grid_n >= 64 required.
PositivityHorizon positivity_horizon(const HelferParams& p, double r,
                                     double t_max, int grid_n);

//! Lorentzian-sampled margin against the bound -bound_const/tau^4 over a
//! log tau grid. bound_const must be positive.
std::vector<QIReport> qi_margin(const HelferParams& p, double r,
                                const GridSpec& tau_grid, double bound_const);

}  // namespace helfer
