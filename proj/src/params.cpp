#include "helfer/params.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>

namespace helfer {

namespace {
constexpr double kPi = std::numbers::pi;
}

double default_chi0(double p0) {
  if (!(p0 > 0.0)) {
    throw std::invalid_argument("default_chi0: p0 must be positive, got " +
                                std::to_string(p0));
  }
  return 3.0 / (800.0 * kPi * p0);
}

double chi0_bound(double p0) {
  if (!(p0 > 0.0)) {
    throw std::invalid_argument("chi0_bound: p0 must be positive, got " +
                                std::to_string(p0));
  }
  return 3.0 / (80.0 * kPi * p0);
}

double normalization(double lambda, double p0, double q, double chi0) {
  const double i_norm = 16.0 * kPi * kPi / 3.0 * chi0 * chi0 *
                        (p0 * p0 / q - p0 * p0 * p0 / lambda);
  return 1.0 / std::sqrt(1.0 + 2.0 * i_norm);
}

double normalization_asymptotic(double p0, double q, double chi0) {
  const double term = 32.0 * kPi * kPi / 3.0 * chi0 * chi0 * p0 * p0 / q;
  return 1.0 / std::sqrt(1.0 + term);
}

HelferParams make_params(double lambda, double p0, double q,
                         std::optional<double> chi0) {
  if (!(p0 > 0.0)) {
    throw std::invalid_argument("make_params: p0 must be positive, got " +
                                std::to_string(p0));
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("make_params: lambda must be positive, got " +
                                std::to_string(lambda));
  }
  if (!(q > 1.0)) {
    throw std::invalid_argument(
        "make_params: q must exceed 1 (the high-frequency approximation "
        "needs q >> 1), got " +
        std::to_string(q));
  }
  if (!(lambda > q * p0)) {
    throw std::invalid_argument(
        "make_params: empty omega range, lambda = " + std::to_string(lambda) +
        " must exceed q*p0 = " + std::to_string(q * p0));
  }
  const double chi0_value = chi0.value_or(default_chi0(p0));
  if (!(chi0_value >= 0.0)) {
    throw std::invalid_argument("make_params: chi0 must be nonnegative, got " +
                                std::to_string(chi0_value));
  }
  if (q < 5.0) {
    std::cerr << "warning: q = " << q
              << " is below 5; the closed forms degrade for small q\n";
  }
  HelferParams p;
  p.lambda = lambda;
  p.p0 = p0;
  p.q = q;
  p.chi0 = chi0_value;
  p.n_norm = normalization(lambda, p0, q, chi0_value);
  return p;
}

}  // namespace helfer
