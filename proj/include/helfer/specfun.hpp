#pragma once

namespace helfer {

//! Cosine integral Ci(x) = gamma + ln x + int_0^x (cos u - 1)/u du, x > 0.
//! Power series for x <= 4, Lentz continued fraction on the imaginary
//! axis otherwise. Relative accuracy ~1e-15 away from the zeros of Ci.
double cosine_integral(double x);

//! Exponential integral E1(x) = int_x^inf e^(-u)/u du, x > 0.
//! Power series for x <= 1, Lentz continued fraction for x > 1.
double exp_integral_e1(double x);

//! Radial profile evaluation together with the branch that produced it.
//! The closed forms lose all significant digits against their 1/r^4..1/r^6
//! prefactors as r -> 0, so small arguments take a Maclaurin branch.
struct ProfileValue {
  enum class Branch { series, closed_form };
  double value = 0.0;
  Branch branch = Branch::closed_form;
};

//! Series branch is taken iff p0*r < kProfileSeriesRadius.
inline constexpr double kProfileSeriesRadius = 1e-2;

//! f1(p0,r) = (4pi)^2/r^6 [sin(p0 r) - p0 r cos(p0 r)]^2.
//! Nonnegative; f1 -> (4pi/3)^2 p0^6 as r -> 0.
ProfileValue f1_profile(double p0, double r);

//! f2(p0,r) = 4pi/r^5 [3(p0^2 r^2 - 2) sin(p0 r) - p0 r (p0^2 r^2 - 6) cos(p0 r)].
//! f2 -> (4pi/5) p0^5 as r -> 0.
ProfileValue f2_profile(double p0, double r);

//! g2(p0,r) = 4pi/r^4 [3 p0 r cos(p0 r) + (p0^2 r^2 - 3) sin(p0 r)].
//! g2(p0,0) = 0; satisfies (1/r^2) d(r^2 g2)/dr = -f2 identically.
ProfileValue g2_profile(double p0, double r);

inline double f1(double p0, double r) { return f1_profile(p0, r).value; }
inline double f2(double p0, double r) { return f2_profile(p0, r).value; }
inline double g2(double p0, double r) { return g2_profile(p0, r).value; }

namespace detail {
// Dimensionless shapes of s = p0*r, both branches exposed so tests can
// probe agreement across the switch radius:
//   f1 = p0^6 * shape1(s),  f2 = p0^5 * shape2(s),  g2 = p0^4 * shapeg(s).
double shape1_series(double s);
double shape1_closed(double s);
double shape2_series(double s);
double shape2_closed(double s);
double shapeg_series(double s);
double shapeg_closed(double s);
}  // namespace detail

}  // namespace helfer
