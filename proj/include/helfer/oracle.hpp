#pragma once

#include <cstdint>

#include "helfer/params.hpp"

namespace helfer {

//! Monte Carlo estimate of one momentum-space integral. mean/std_error
//! estimate the real part; imag_* track the imaginary part of the sampled
//! phase factor, which integrates to zero at t = 0 and serves as a free
//! consistency diagnostic there. Identical (seed, n) reproduce the mean
//! bit for bit at any worker count.
struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  double elapsed = 0.0;  // seconds
  double imag_mean = 0.0;
  double imag_std_error = 0.0;
};

//! Cutoff shell lambda_lo < |k| < lambda_hi for the sampled mode sum.
//! Differencing two cutoffs isolates the ln(lambda_hi/lambda_lo)
//! coefficient of the closed forms, which carries no q.
struct ShellSpec {
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
};

inline constexpr int kSubstreams = 64;

//! Exact rho2 contribution of modes with the first particle in the shell:
//! p = k + k' uniform in the p0 ball, k uniform in the shell volume, the
//! full sqrt(ww')(1 + khat.khat')/(ww') weight with w' = |p - k|, and the
//! |p - k| < lambda constraint enforced by zero-weight rejection.
//! Requires n >= 1e4, |t| < 0.1/p0 and |t| <= 0.5/lambda_lo (phase across
//! the shell stays mild). threads as in field_grid.
MCEstimate mc_rho2_shell(const HelferParams& p, const ShellSpec& shell,
                         double r, double t, std::uint64_t n,
                         std::uint64_t seed, int threads = -1);

//! Exact rho1 shell contribution at t = 0 (9-dimensional: k1 in the
//! shell, p and p' in the p0 ball). Requires n >= 1e5.
MCEstimate mc_rho1_shell(const HelferParams& p, const ShellSpec& shell,
                         double r, std::uint64_t n, std::uint64_t seed,
                         int threads = -1);

//! Exact I2 shell contribution (flux is -I2). Same constraints as
//! mc_rho2_shell except t = 0 is allowed (both sides vanish by symmetry);
//! requires r > 0.
MCEstimate mc_flux_shell(const HelferParams& p, const ShellSpec& shell,
                         double r, double t, std::uint64_t n,
                         std::uint64_t seed, int threads = -1);

//! Exact I1 at t = 0 over the full momentum range |k1| < lambda, radially
//! importance-sampled against the 1/k1^2 weight. The integral vanishes by
//! k -> -k symmetry; the estimate must be consistent with zero.
//! Requires n >= 1e5.
MCEstimate mc_i1_t0(const HelferParams& p, double r, std::uint64_t n,
                    std::uint64_t seed, int threads = -1);

//! Closed-form shell values the estimates are compared against; the
//! undetermined q cancels in these cutoff differences.
double closed_rho2_shell(const HelferParams& p, const ShellSpec& shell,
                         double r, double t);
double closed_rho1_shell(const HelferParams& p, const ShellSpec& shell,
                         double r);
double closed_i2_shell(const HelferParams& p, const ShellSpec& shell,
                       double r, double t);

}  // namespace helfer
