#include "helfer/vacuum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace helfer {

namespace {

constexpr double kPi = std::numbers::pi;

bool on_lightcone(double a, double b) {
  return std::abs(a * a - b * b) < kLightconeEps;
}

}  // namespace

const char* to_string(CorrCase c) {
  switch (c) {
    case CorrCase::a_positive: return "A-positive";
    case CorrCase::a_negative: return "A-negative";
    case CorrCase::b_positive: return "B-positive";
    case CorrCase::b_negative: return "B-negative";
    case CorrCase::outgoing_correlated: return "outgoing-correlated";
    case CorrCase::ingoing_correlated: return "ingoing-correlated";
    case CorrCase::lightcone: return "lightcone";
  }
  return "unknown";
}

CorrCase sign_case_2d(double x, double tprime) {
  if (on_lightcone(x, tprime)) return CorrCase::lightcone;
  // sign(C) = sign(-x t'); C = 0 on the axes takes the positive label.
  const bool positive = -x * tprime >= 0.0;
  if (tprime < 0.0) {
    return positive ? CorrCase::a_positive : CorrCase::a_negative;
  }
  return positive ? CorrCase::b_positive : CorrCase::b_negative;
}

CorrSample corr2d(double x, double tprime) {
  CorrSample s;
  s.coord_a = x;
  s.coord_b = tprime;
  if (on_lightcone(x, tprime)) {
    s.c_value = std::numeric_limits<double>::quiet_NaN();
    s.label = CorrCase::lightcone;
    return s;
  }
  const double d = x * x - tprime * tprime;
  const double d4 = (d * d) * (d * d);
  s.c_value = -x * tprime * (x * x + tprime * tprime) / (kPi * kPi * d4);
  s.label = sign_case_2d(x, tprime);
  return s;
}

CorrSample corr4d(double r, double dt) {
  if (!(r > 0.0)) {
    throw std::invalid_argument(
        "corr4d: r must be positive (radial flux direction undefined at the "
        "origin), got " +
        std::to_string(r));
  }
  CorrSample s;
  s.coord_a = r;
  s.coord_b = dt;
  if (on_lightcone(r, dt)) {
    s.c_value = std::numeric_limits<double>::quiet_NaN();
    s.label = CorrCase::lightcone;
    return s;
  }
  const double d = r * r - dt * dt;
  const double d2 = d * d;
  const double d6 = d2 * d2 * d2;
  s.c_value = 4.0 * r * dt * (r * r + dt * dt) / (kPi * kPi * kPi * kPi * d6);
  s.label = dt >= 0.0 ? CorrCase::outgoing_correlated
                      : CorrCase::ingoing_correlated;
  return s;
}

double falloff_exponent(CorrKind kind, VaryAxis axis, double fixed_value,
                        const GridSpec& range) {
  if (range.scale != GridSpec::Scale::log) {
    throw std::invalid_argument("falloff_exponent: range must be log-scaled");
  }
  if (range.count < 32) {
    throw std::invalid_argument(
        "falloff_exponent: need at least 32 points, got " +
        std::to_string(range.count));
  }
  const double barrier = std::abs(fixed_value);
  if (range.min <= barrier && barrier <= range.max) {
    throw std::invalid_argument(
        "falloff_exponent: range crosses the light cone at coordinate " +
        std::to_string(barrier));
  }
  if (range.min < 10.0 * barrier) {
    throw std::invalid_argument(
        "falloff_exponent: range must start at >= 10x the fixed coordinate");
  }

  const std::vector<double> pts = grid_points(range);
  // ordinary least squares on (log coord, log |C|); the asymptote is an
  // exact power law, so no weighting
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double v : pts) {
    CorrSample s;
    if (kind == CorrKind::two_d) {
      s = axis == VaryAxis::a ? corr2d(v, fixed_value) : corr2d(fixed_value, v);
    } else {
      s = axis == VaryAxis::a ? corr4d(v, fixed_value) : corr4d(fixed_value, v);
    }
    const double lx = std::log(v);
    const double ly = std::log(std::abs(s.c_value));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(pts.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace helfer
