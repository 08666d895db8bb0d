#include "helfer/field.hpp"

#include <omp.h>

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "helfer/specfun.hpp"

namespace helfer {

namespace {

constexpr double kPi = std::numbers::pi;

// int_{q p0}^{lambda} dw cos(2wt)/w
double omega_cos_integral(const HelferParams& p, double t) {
  if (t == 0.0) return std::log(p.lambda / p.omega_lo());
  const double tau = std::abs(t);
  return cosine_integral(2.0 * p.lambda * tau) -
         cosine_integral(2.0 * p.omega_lo() * tau);
}

// [cos(2 lambda t) - cos(2 q p0 t)]/t for t = |t| >= 0; Taylor form when
// both arguments are small enough that the quotient cancels badly.
double oscillation_quotient(const HelferParams& p, double tau) {
  const double a = p.omega_lo();
  const double hi = 2.0 * p.lambda * tau;
  const double lo = 2.0 * a * tau;
  if (std::max(hi, lo) < 1e-4) {
    const double l2 = p.lambda * p.lambda, a2 = a * a;
    const double l4 = l2 * l2, a4 = a2 * a2;
    return tau * (-2.0 * (l2 - a2) +
                  tau * tau * (2.0 / 3.0 * (l4 - a4) -
                               tau * tau * 4.0 / 45.0 * (l2 * l4 - a2 * a4)));
  }
  return (std::cos(hi) - std::cos(lo)) / tau;
}

}  // namespace

double rho1(const HelferParams& p, double r) {
  return 2.0 * p.chi0 * p.chi0 * p.n2() / (kPi * kPi) * f1(p.p0, r) *
         std::log(p.lambda / p.omega_lo());
}

double rho2(const HelferParams& p, double r, double t) {
  return -p.chi0 * p.n2() / (6.0 * kPi * kPi) * f2(p.p0, r) *
         omega_cos_integral(p, t);
}

double rho_total(const HelferParams& p, double r, double t) {
  return rho1(p, r) + rho2(p, r, t);
}

double flux(const HelferParams& p, double r, double t) {
  if (t == 0.0 || r == 0.0) return 0.0;
  // F = -I2; evaluate at |t| and restore the sign so F is odd exactly.
  const double tau = std::abs(t);
  const double magnitude = -p.chi0 * p.n2() / (6.0 * kPi * kPi) *
                           g2(p.p0, r) * oscillation_quotient(p, tau);
  return t > 0.0 ? magnitude : -magnitude;
}

FieldSample field_sample(const HelferParams& p, double r, double t) {
  FieldSample s;
  s.r = r;
  s.t = t;
  s.rho1 = rho1(p, r);
  s.rho2 = rho2(p, r, t);
  s.rho = s.rho1 + s.rho2;
  s.flux = flux(p, r, t);
  return s;
}

std::vector<FieldSample> field_grid(const HelferParams& p,
                                    const GridSpec& r_grid,
                                    const GridSpec& t_grid, int threads) {
  const std::vector<double> rs = grid_points(r_grid);
  const std::vector<double> ts = grid_points(t_grid);
  if (!rs.empty() && rs.front() < 0.0) {
    throw std::invalid_argument("field_grid: r grid must be nonnegative");
  }
  const double t_reach = std::max(std::abs(ts.front()), std::abs(ts.back()));
  if (t_reach > 0.1 / p.p0) {
    std::cerr << "warning: t grid extends past 0.1/p0 = " << 0.1 / p.p0
              << "; the closed forms drop slow components there\n";
  }

  const std::int64_t nr = static_cast<std::int64_t>(rs.size());
  const std::int64_t nt = static_cast<std::int64_t>(ts.size());
  std::vector<FieldSample> samples(static_cast<std::size_t>(nr * nt));
  if (threads == 0) {
    for (std::int64_t idx = 0; idx < nr * nt; ++idx) {
      samples[idx] = field_sample(p, rs[idx / nt], ts[idx % nt]);
    }
  } else {
    const int nthreads = threads < 0 ? omp_get_max_threads() : threads;
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (std::int64_t idx = 0; idx < nr * nt; ++idx) {
      samples[idx] = field_sample(p, rs[idx / nt], ts[idx % nt]);
    }
  }
  return samples;
}

}  // namespace helfer
