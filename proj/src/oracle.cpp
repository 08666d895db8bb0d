#include "helfer/oracle.hpp"

#include <omp.h>

#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "helfer/rng.hpp"
#include "helfer/specfun.hpp"

namespace helfer {

namespace {

constexpr double kPi = std::numbers::pi;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

// Draw order is part of the substream contract: radius first, then the
// direction (cos-polar, azimuth).
inline Vec3 sample_radius_dir(Xoshiro256pp& rng, double radius) {
  const double cz = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * kPi * rng.uniform();
  const double sz = std::sqrt(1.0 - cz * cz);
  return {radius * sz * std::cos(phi), radius * sz * std::sin(phi),
          radius * cz};
}

inline Vec3 sample_shell(Xoshiro256pp& rng, double lo3, double span3) {
  const double radius = std::cbrt(lo3 + rng.uniform() * span3);
  return sample_radius_dir(rng, radius);
}

inline Vec3 sample_ball(Xoshiro256pp& rng, double p0) {
  const double radius = p0 * std::cbrt(rng.uniform());
  return sample_radius_dir(rng, radius);
}

struct Partial {
  double sum_re = 0.0, sum_re2 = 0.0;
  double sum_im = 0.0, sum_im2 = 0.0;
};

// Runs n samples split over kSubstreams deterministic substreams and
// merges the partial sums in substream order, so the result is identical
// for any worker count (threads: -1 all, 0 serial reference, k > 0 = k).
template <typename Kernel>
MCEstimate run_mc(const Kernel& kernel, double weight, std::uint64_t n,
                  std::uint64_t seed, int threads) {
  const auto start = std::chrono::steady_clock::now();
  std::array<Partial, kSubstreams> parts{};

  auto run_substream = [&](int s) {
    Xoshiro256pp rng = substream_rng(seed, s);
    const std::uint64_t base = n / kSubstreams;
    const std::uint64_t count =
        base + (static_cast<std::uint64_t>(s) < n % kSubstreams ? 1 : 0);
    Partial acc;
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto [g_re, g_im] = kernel(rng);
      const double re = weight * g_re;
      const double im = weight * g_im;
      acc.sum_re += re;
      acc.sum_re2 += re * re;
      acc.sum_im += im;
      acc.sum_im2 += im * im;
    }
    parts[static_cast<std::size_t>(s)] = acc;
  };

  if (threads == 0) {
    for (int s = 0; s < kSubstreams; ++s) run_substream(s);
  } else {
    const int nthreads = threads < 0 ? omp_get_max_threads() : threads;
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (int s = 0; s < kSubstreams; ++s) run_substream(s);
  }

  Partial total;
  for (const Partial& acc : parts) {
    total.sum_re += acc.sum_re;
    total.sum_re2 += acc.sum_re2;
    total.sum_im += acc.sum_im;
    total.sum_im2 += acc.sum_im2;
  }

  const double dn = static_cast<double>(n);
  MCEstimate est;
  est.n_samples = n;
  est.seed = seed;
  est.mean = total.sum_re / dn;
  est.imag_mean = total.sum_im / dn;
  const double var_re =
      std::max(0.0, (total.sum_re2 - dn * est.mean * est.mean) / (dn - 1.0));
  const double var_im = std::max(
      0.0, (total.sum_im2 - dn * est.imag_mean * est.imag_mean) / (dn - 1.0));
  est.std_error = std::sqrt(var_re / dn);
  est.imag_std_error = std::sqrt(var_im / dn);
  est.elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return est;
}

void check_shell(const HelferParams& p, const ShellSpec& shell) {
  if (!(shell.lambda_lo < shell.lambda_hi)) {
    throw std::invalid_argument("ShellSpec: lambda_lo must be below lambda_hi");
  }
  if (!(shell.lambda_lo > p.omega_lo())) {
    throw std::invalid_argument(
        "ShellSpec: lambda_lo = " + std::to_string(shell.lambda_lo) +
        " must exceed q*p0 = " + std::to_string(p.omega_lo()));
  }
  if (!(shell.lambda_hi <= p.lambda)) {
    throw std::invalid_argument(
        "ShellSpec: lambda_hi = " + std::to_string(shell.lambda_hi) +
        " must not exceed lambda = " + std::to_string(p.lambda));
  }
  if (!(shell.lambda_lo >= 20.0 * p.p0)) {
    throw std::invalid_argument(
        "ShellSpec: lambda_lo = " + std::to_string(shell.lambda_lo) +
        " is below the 20*p0 comparison floor = " + std::to_string(20.0 * p.p0));
  }
}

void check_samples(std::uint64_t n, std::uint64_t n_min, const char* op) {
  if (n < n_min) {
    throw std::invalid_argument(std::string(op) + ": n = " + std::to_string(n) +
                                " is below the minimum " +
                                std::to_string(n_min));
  }
}

void check_time(const HelferParams& p, const ShellSpec& shell, double t,
                const char* op) {
  if (!(std::abs(t) < 0.1 / p.p0)) {
    throw std::invalid_argument(std::string(op) +
                                ": |t| must stay below 0.1/p0");
  }
  if (!(std::abs(t) <= 0.5 / shell.lambda_lo)) {
    throw std::invalid_argument(
        std::string(op) +
        ": |t| must stay below 0.5/lambda_lo to keep the phase across the "
        "shell mild");
  }
}

double shell_volume(const ShellSpec& s) {
  return 4.0 * kPi / 3.0 *
         (s.lambda_hi * s.lambda_hi * s.lambda_hi -
          s.lambda_lo * s.lambda_lo * s.lambda_lo);
}

}  // namespace

MCEstimate mc_rho2_shell(const HelferParams& p, const ShellSpec& shell,
                         double r, double t, std::uint64_t n,
                         std::uint64_t seed, int threads) {
  check_shell(p, shell);
  check_samples(n, 10000, "mc_rho2_shell");
  check_time(p, shell, t, "mc_rho2_shell");

  const double lo3 = shell.lambda_lo * shell.lambda_lo * shell.lambda_lo;
  const double span3 = shell.lambda_hi * shell.lambda_hi * shell.lambda_hi - lo3;
  const double v_ball = 4.0 * kPi / 3.0 * p.p0 * p.p0 * p.p0;
  const double weight =
      -p.chi0 * p.n2() / (8.0 * kPi * kPi * kPi) * shell_volume(shell) * v_ball;
  const double lambda = p.lambda;
  const double p0 = p.p0;

  auto kernel = [=](Xoshiro256pp& rng) -> std::pair<double, double> {
    const Vec3 k = sample_shell(rng, lo3, span3);
    const Vec3 p_tot = sample_ball(rng, p0);
    const double w = norm(k);
    const Vec3 kp = p_tot - k;
    const double wp = norm(kp);
    if (wp >= lambda) return {0.0, 0.0};
    // 1 + khat.khat' = |khat + khat'|^2 / 2; the direct dot cancels to
    // O(p0^2/w^2) and would lose all digits
    const Vec3 s{k.x / w + kp.x / wp, k.y / w + kp.y / wp, k.z / w + kp.z / wp};
    const double one_plus = 0.5 * dot(s, s);
    const double base = one_plus / std::sqrt(w * wp);
    const double phase = p_tot.z * r - (w + wp) * t;
    return {base * std::cos(phase), base * std::sin(phase)};
  };
  return run_mc(kernel, weight, n, seed, threads);
}

MCEstimate mc_rho1_shell(const HelferParams& p, const ShellSpec& shell,
                         double r, std::uint64_t n, std::uint64_t seed,
                         int threads) {
  check_shell(p, shell);
  check_samples(n, 100000, "mc_rho1_shell");

  const double lo3 = shell.lambda_lo * shell.lambda_lo * shell.lambda_lo;
  const double span3 = shell.lambda_hi * shell.lambda_hi * shell.lambda_hi - lo3;
  const double v_ball = 4.0 * kPi / 3.0 * p.p0 * p.p0 * p.p0;
  const double weight = 2.0 * p.chi0 * p.chi0 * p.n2() /
                        (8.0 * kPi * kPi * kPi) * shell_volume(shell) *
                        v_ball * v_ball;
  const double lambda = p.lambda;
  const double p0 = p.p0;

  auto kernel = [=](Xoshiro256pp& rng) -> std::pair<double, double> {
    const Vec3 k1 = sample_shell(rng, lo3, span3);
    const Vec3 pa = sample_ball(rng, p0);
    const Vec3 pb = sample_ball(rng, p0);
    const Vec3 k = pa - k1;
    const Vec3 kp = pb - k1;
    const double w = norm(k);
    const double wp = norm(kp);
    if (w >= lambda || wp >= lambda) return {0.0, 0.0};
    const double one_plus = 1.0 + dot(k, kp) / (w * wp);
    const double base = one_plus / (std::sqrt(w * wp) * dot(k1, k1));
    const double phase = (pa.z - pb.z) * r;  // t = 0
    return {base * std::cos(phase), base * std::sin(phase)};
  };
  return run_mc(kernel, weight, n, seed, threads);
}

MCEstimate mc_flux_shell(const HelferParams& p, const ShellSpec& shell,
                         double r, double t, std::uint64_t n,
                         std::uint64_t seed, int threads) {
  check_shell(p, shell);
  check_samples(n, 10000, "mc_flux_shell");
  check_time(p, shell, t, "mc_flux_shell");
  if (!(r > 0.0)) {
    throw std::invalid_argument("mc_flux_shell: r must be positive");
  }

  const double lo3 = shell.lambda_lo * shell.lambda_lo * shell.lambda_lo;
  const double span3 = shell.lambda_hi * shell.lambda_hi * shell.lambda_hi - lo3;
  const double v_ball = 4.0 * kPi / 3.0 * p.p0 * p.p0 * p.p0;
  const double weight =
      p.chi0 * p.n2() / (8.0 * kPi * kPi * kPi) * shell_volume(shell) * v_ball;
  const double lambda = p.lambda;
  const double p0 = p.p0;

  auto kernel = [=](Xoshiro256pp& rng) -> std::pair<double, double> {
    const Vec3 k = sample_shell(rng, lo3, span3);
    const Vec3 p_tot = sample_ball(rng, p0);
    const Vec3 kp = p_tot - k;
    const double w = norm(k);
    const double wp = norm(kp);
    if (wp >= lambda) return {0.0, 0.0};
    // w k'_z + w' k_z = w p_z + k_z (w' - w); the O(w^2) parts cancel, so
    // use w' - w = (p^2 - 2 k.p)/(w + w')
    const double pref =
        w * p_tot.z +
        k.z * (dot(p_tot, p_tot) - 2.0 * dot(k, p_tot)) / (w + wp);
    const double wwp = w * wp;
    const double base = pref / (wwp * std::sqrt(wwp));
    const double phase = p_tot.z * r - (w + wp) * t;
    return {base * std::cos(phase), base * std::sin(phase)};
  };
  return run_mc(kernel, weight, n, seed, threads);
}

MCEstimate mc_i1_t0(const HelferParams& p, double r, std::uint64_t n,
                    std::uint64_t seed, int threads) {
  check_samples(n, 100000, "mc_i1_t0");

  const double v_ball = 4.0 * kPi / 3.0 * p.p0 * p.p0 * p.p0;
  // |k1| is importance-sampled uniformly in radius: d^3k1 = s^2 ds dOmega
  // against pdf 1/(4 pi lambda) gives weight 4 pi lambda s^2, whose s^2
  // cancels the integrand's 1/k1^2 exactly.
  const double weight = -2.0 * p.chi0 * p.chi0 * p.n2() /
                        (8.0 * kPi * kPi * kPi) * 4.0 * kPi * p.lambda *
                        v_ball * v_ball;
  const double lambda = p.lambda;
  const double p0 = p.p0;

  auto kernel = [=](Xoshiro256pp& rng) -> std::pair<double, double> {
    const double s_rad = lambda * rng.uniform_pos();
    const Vec3 k1 = sample_radius_dir(rng, s_rad);
    const Vec3 pa = sample_ball(rng, p0);
    const Vec3 pb = sample_ball(rng, p0);
    const Vec3 k = pa - k1;
    const Vec3 kp = pb - k1;
    const double w = norm(k);
    const double wp = norm(kp);
    if (w >= lambda || wp >= lambda) return {0.0, 0.0};
    const double wwp = w * wp;
    const double pref = (w * kp.z + wp * k.z) / (wwp * std::sqrt(wwp));
    const double phase = (pb.z - pa.z) * r;  // t = 0
    return {pref * std::cos(phase), pref * std::sin(phase)};
  };
  return run_mc(kernel, weight, n, seed, threads);
}

double closed_rho2_shell(const HelferParams& p, const ShellSpec& shell,
                         double r, double t) {
  check_shell(p, shell);
  double omega_factor;
  if (t == 0.0) {
    omega_factor = std::log(shell.lambda_hi / shell.lambda_lo);
  } else {
    const double tau = std::abs(t);
    omega_factor = cosine_integral(2.0 * shell.lambda_hi * tau) -
                   cosine_integral(2.0 * shell.lambda_lo * tau);
  }
  return -p.chi0 * p.n2() / (6.0 * kPi * kPi) * f2(p.p0, r) * omega_factor;
}

double closed_rho1_shell(const HelferParams& p, const ShellSpec& shell,
                         double r) {
  check_shell(p, shell);
  return 2.0 * p.chi0 * p.chi0 * p.n2() / (kPi * kPi) * f1(p.p0, r) *
         std::log(shell.lambda_hi / shell.lambda_lo);
}

double closed_i2_shell(const HelferParams& p, const ShellSpec& shell,
                       double r, double t) {
  check_shell(p, shell);
  if (t == 0.0) return 0.0;
  const double tau = std::abs(t);
  double osc;
  if (2.0 * shell.lambda_hi * tau < 1e-4) {
    const double h2 = shell.lambda_hi * shell.lambda_hi;
    const double l2 = shell.lambda_lo * shell.lambda_lo;
    osc = tau * (-2.0 * (h2 - l2) +
                 tau * tau * (2.0 / 3.0 * (h2 * h2 - l2 * l2)));
  } else {
    osc = (std::cos(2.0 * shell.lambda_hi * tau) -
           std::cos(2.0 * shell.lambda_lo * tau)) /
          tau;
  }
  if (t < 0.0) osc = -osc;
  return p.chi0 * p.n2() / (6.0 * kPi * kPi) * g2(p.p0, r) * osc;
}

}  // namespace helfer
