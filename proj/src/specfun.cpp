#include "helfer/specfun.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace helfer {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
constexpr int kMaxIter = 20000;

// Modified Lentz evaluation of the continued fraction
//   E1(z) = e^(-z) / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...))))
// (even contraction, a_k = -k^2). Converges for Re z > 0 and on the
// imaginary axis for |z| >~ 2.
std::complex<double> e1_continued_fraction(std::complex<double> z) {
  constexpr double tiny = 1e-300;
  std::complex<double> b = z + 1.0;
  std::complex<double> c = 1.0 / tiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-z);
}

}  // namespace

double cosine_integral(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("cosine_integral: x must be positive, got " +
                                std::to_string(x));
  }
  if (x <= 4.0) {
    // Ci(x) = gamma + ln x + sum_{k>=1} (-1)^k x^(2k) / (2k (2k)!)
    double sum = 0.0;
    double pk = 1.0;  // (-1)^k x^(2k) / (2k)!
    for (int k = 1; k < kMaxIter; ++k) {
      pk *= -x * x / ((2.0 * k - 1.0) * (2.0 * k));
      const double term = pk / (2.0 * k);
      sum += term;
      if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
    }
    return kEulerGamma + std::log(x) + sum;
  }
  // Ci(x) = -Re E1(ix)
  return -e1_continued_fraction({0.0, x}).real();
}

double exp_integral_e1(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("exp_integral_e1: x must be positive, got " +
                                std::to_string(x));
  }
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!)
    double sum = 0.0;
    double pk = 1.0;  // (-1)^(k+1) x^k / k!
    for (int k = 1; k < kMaxIter; ++k) {
      pk *= -x / k;
      const double term = -pk / k;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  return e1_continued_fraction({x, 0.0}).real();
}

namespace detail {

// shape2(s) = 4 pi [3(s^2-2) sin s - s(s^2-6) cos s] / s^5
double shape2_closed(double s) {
  return 4.0 * kPi *
         (3.0 * (s * s - 2.0) * std::sin(s) -
          s * (s * s - 6.0) * std::cos(s)) /
         (s * s * s * s * s);
}

double shape2_series(double s) {
  const double y = s * s;
  return 4.0 * kPi *
         (1.0 / 5.0 + y * (-1.0 / 42.0 + y * (1.0 / 1080.0 - y / 55440.0)));
}

// shape1(s) = (4 pi)^2 [sin s - s cos s]^2 / s^6
double shape1_closed(double s) {
  const double num = std::sin(s) - s * std::cos(s);
  const double s3 = s * s * s;
  const double quot = num / s3;
  return 16.0 * kPi * kPi * quot * quot;
}

double shape1_series(double s) {
  const double y = s * s;
  const double quot =
      1.0 / 3.0 + y * (-1.0 / 30.0 + y * (1.0 / 840.0 - y / 45360.0));
  return 16.0 * kPi * kPi * quot * quot;
}

// shapeg(s) = 4 pi [3 s cos s + (s^2-3) sin s] / s^4
double shapeg_closed(double s) {
  return 4.0 * kPi * (3.0 * s * std::cos(s) + (s * s - 3.0) * std::sin(s)) /
         (s * s * s * s);
}

double shapeg_series(double s) {
  const double y = s * s;
  return 4.0 * kPi * s *
         (-1.0 / 15.0 + y * (1.0 / 210.0 + y * (-1.0 / 7560.0 + y / 498960.0)));
}

}  // namespace detail

namespace {

void check_profile_args(const char* name, double p0, double r) {
  if (!(p0 > 0.0)) {
    throw std::invalid_argument(std::string(name) +
                                ": p0 must be positive, got " +
                                std::to_string(p0));
  }
  if (!(r >= 0.0)) {
    throw std::invalid_argument(std::string(name) +
                                ": r must be nonnegative, got " +
                                std::to_string(r));
  }
}

}  // namespace

ProfileValue f1_profile(double p0, double r) {
  check_profile_args("f1", p0, r);
  const double s = p0 * r;
  const double scale = p0 * p0 * p0 * p0 * p0 * p0;
  if (s < kProfileSeriesRadius) {
    return {scale * detail::shape1_series(s), ProfileValue::Branch::series};
  }
  return {scale * detail::shape1_closed(s), ProfileValue::Branch::closed_form};
}

ProfileValue f2_profile(double p0, double r) {
  check_profile_args("f2", p0, r);
  const double s = p0 * r;
  const double scale = p0 * p0 * p0 * p0 * p0;
  if (s < kProfileSeriesRadius) {
    return {scale * detail::shape2_series(s), ProfileValue::Branch::series};
  }
  return {scale * detail::shape2_closed(s), ProfileValue::Branch::closed_form};
}

ProfileValue g2_profile(double p0, double r) {
  check_profile_args("g2", p0, r);
  const double s = p0 * r;
  const double scale = p0 * p0 * p0 * p0;
  if (s < kProfileSeriesRadius) {
    return {scale * detail::shapeg_series(s), ProfileValue::Branch::series};
  }
  return {scale * detail::shapeg_closed(s), ProfileValue::Branch::closed_form};
}

}  // namespace helfer
