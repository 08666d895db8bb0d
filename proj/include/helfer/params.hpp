#pragma once

#include <optional>

namespace helfer {

//! Defining parameters of the Helfer state plus the derived normalization.
//! Immutable after construction via make_params; safe to share across
//! threads.
struct HelferParams {
  double lambda = 0.0;  // single-particle momentum cutoff (inverse length)
  double p0 = 0.0;      // pair-momentum cutoff (inverse length)
  double q = 0.0;       // dimensionless lower-cutoff multiplier, > 1
  double chi0 = 0.0;    // spectral amplitude (length; chi0*p0 dimensionless)
  double n_norm = 1.0;  // normalization N in (0, 1]

  //! Effective lower cutoff of the omega integrals.
  double omega_lo() const { return q * p0; }
  double n2() const { return n_norm * n_norm; }
};

//! Default spectral amplitude 3/(800 pi p0), one tenth of chi0_bound;
//! the value used for the reference figure datasets.
double default_chi0(double p0);

//! Central-region negativity threshold 3/(80 pi p0): rho(0,0) < 0 holds
//! for chi0 strictly below this.
double chi0_bound(double p0);

//! Normalization N = (1 + 2 I)^(-1/2) with the full cutoff-dependent
//! I = (16 pi^2/3) chi0^2 (p0^2/q - p0^3/lambda).
double normalization(double lambda, double p0, double q, double chi0);

//! Large-cutoff limit N = (1 + (32 pi^2/3) chi0^2 p0^2/q)^(-1/2).
double normalization_asymptotic(double p0, double q, double chi0);

//! Validates and assembles the parameter set. chi0 omitted means
//! default_chi0(p0). Throws std::invalid_argument on: nonpositive lambda
//! or p0, q <= 1, lambda <= q*p0 (empty omega range), chi0 < 0.
//! Emits a warning on std::cerr for 1 < q < 5 where the high-frequency
//! approximation is marginal.
HelferParams make_params(double lambda, double p0, double q,
                         std::optional<double> chi0 = std::nullopt);

}  // namespace helfer
