#pragma once

#include "helfer/grid.hpp"

namespace helfer {

//! Sign-region classification for vacuum energy-density/flux correlators.
//! 2D labels follow the quadrant case analysis in the (x, t') plane;
//! 4D labels encode that positive C (sign of dt) pairs a positive energy
//! fluctuation with a later outgoing (or earlier ingoing) flux fluctuation.
enum class CorrCase {
  a_positive,   // 2D, t' < 0, C > 0
  a_negative,   // 2D, t' < 0, C < 0
  b_positive,   // 2D, t' > 0, C > 0
  b_negative,   // 2D, t' > 0, C < 0
  outgoing_correlated,  // 4D, dt > 0
  ingoing_correlated,   // 4D, dt < 0
  lightcone,
};

const char* to_string(CorrCase c);

//! One correlator evaluation. c_value is NaN when label == lightcone.
struct CorrSample {
  double coord_a = 0.0;  // x (2D) or r (4D)
  double coord_b = 0.0;  // t' (2D) or dt (4D)
  double c_value = 0.0;
  CorrCase label = CorrCase::lightcone;
};

//! Tolerance on the squared-interval variable |a^2 - b^2| inside which a
//! point counts as on the light cone. [G'']^2 diverges as sigma^-8 (2D)
//! and sigma^-12 (4D), so values this close to the cone overflow anyway.
inline constexpr double kLightconeEps = 1e-9;

//! 2D vacuum correlator at t = 0, x' = 0:
//!   C = -x t' (x^2 + t'^2) / (pi^2 (x^2 - t'^2)^4).
CorrSample corr2d(double x, double tprime);

//! 4D vacuum correlator at r' = 0 (r > 0 required):
//!   C = 4 r dt (r^2 + dt^2) / (pi^4 (r^2 - dt^2)^6); sign(C) = sign(dt).
CorrSample corr4d(double r, double dt);

//! Quadrant classification matching sign(corr2d). Points on the axes
//! (C = 0 exactly) take the positive-sign label of the adjacent region,
//! with t' = 0 assigned to case B.
CorrCase sign_case_2d(double x, double tprime);

enum class CorrKind { two_d, four_d };
enum class VaryAxis { a, b };  // a = x / r, b = t' / dt

//! Least-squares slope of log|C| against the log of the varying
//! coordinate, the other coordinate held at fixed_value. The range must
//! be log-scaled with >= 32 points, lie entirely outside the light cone,
//! and start at >= 10x the fixed coordinate.
double falloff_exponent(CorrKind kind, VaryAxis axis, double fixed_value,
                        const GridSpec& range);

}  // namespace helfer
