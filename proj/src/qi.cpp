#include "helfer/qi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "helfer/field.hpp"
#include "helfer/specfun.hpp"

namespace helfer {

namespace {
constexpr double kPi = std::numbers::pi;
}

double lorentzian_average(const HelferParams& p, double r, double tau) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("lorentzian_average: tau must be positive");
  }
  // the Lorentzian weight turns cos(2wt) into e^(-2w tau), so the omega
  // integral becomes E1(2 q p0 tau) - E1(2 lambda tau)
  const double e1_diff = exp_integral_e1(2.0 * p.omega_lo() * tau) -
                         exp_integral_e1(2.0 * p.lambda * tau);
  return rho1(p, r) -
         p.chi0 * p.n2() / (6.0 * kPi * kPi) * f2(p.p0, r) * e1_diff;
}

double window_integral(const HelferParams& p, double r, double t_width) {
  if (!(t_width > 0.0)) {
    throw std::invalid_argument("window_integral: T must be positive");
  }
  const double a = p.omega_lo();
  const double bracket =
      std::sin(2.0 * a * t_width) / a -
      std::sin(2.0 * p.lambda * t_width) / p.lambda +
      2.0 * t_width *
          (cosine_integral(2.0 * p.lambda * t_width) -
           cosine_integral(2.0 * a * t_width));
  return 2.0 * t_width * rho1(p, r) -
         p.chi0 * p.n2() / (6.0 * kPi * kPi) * f2(p.p0, r) * bracket;
}

PositivityHorizon positivity_horizon(const HelferParams& p, double r,
                                     double t_max, int grid_n) {
  if (!(t_max > 0.0)) {
    throw std::invalid_argument("positivity_horizon: t_max must be positive");
  }
  if (grid_n < 64) {
    throw std::invalid_argument("positivity_horizon: grid_n must be >= 64");
  }
  const double t_min = 1e-2 / p.lambda;
  if (!(t_max > t_min)) {
    throw std::invalid_argument(
        "positivity_horizon: t_max must exceed 1e-2/lambda");
  }

  const std::vector<double> ts = grid_points(log_grid(t_min, t_max, grid_n));
  std::vector<double> ws(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ws[i] = window_integral(p, r, ts[i]);
  }

  PositivityHorizon result;
  int last_crossing = -1;
  for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
    if (ws[i] == 0.0 || ws[i] * ws[i + 1] >= 0.0) continue;
    ++result.sign_changes;
    last_crossing = static_cast<int>(i);
  }
  if (last_crossing >= 0) {
    double lo = ts[last_crossing], hi = ts[last_crossing + 1];
    double w_lo = ws[last_crossing];
    for (int iter = 0; iter < 64; ++iter) {
      const double mid = std::sqrt(lo * hi);
      const double w_mid = window_integral(p, r, mid);
      if (w_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((w_lo < 0.0) == (w_mid < 0.0)) {
        lo = mid;
        w_lo = w_mid;
      } else {
        hi = mid;
      }
    }
    result.t_star = 0.5 * (lo + hi);
  }
  result.all_positive_beyond = true;
  for (std::size_t i = static_cast<std::size_t>(last_crossing + 1);
       i < ws.size(); ++i) {
    if (ws[i] < 0.0) {
      result.all_positive_beyond = false;
      break;
    }
  }
  return result;
}

std::vector<QIReport> qi_margin(const HelferParams& p, double r,
                                const GridSpec& tau_grid, double bound_const) {
  if (!(bound_const > 0.0)) {
    throw std::invalid_argument("qi_margin: bound_const must be positive, got " +
                                std::to_string(bound_const));
  }
  if (tau_grid.scale != GridSpec::Scale::log) {
    throw std::invalid_argument("qi_margin: tau grid must be log-scaled");
  }
  const std::vector<double> taus = grid_points(tau_grid);
  std::vector<QIReport> reports;
  reports.reserve(taus.size());
  for (double tau : taus) {
    QIReport rep;
    rep.r = r;
    rep.tau_or_t = tau;
    rep.averaged_rho = lorentzian_average(p, r, tau);
    rep.bound_value = -bound_const / (tau * tau * tau * tau);
    rep.margin = rep.averaged_rho - rep.bound_value;
    rep.passed = rep.margin >= 0.0;
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace helfer
