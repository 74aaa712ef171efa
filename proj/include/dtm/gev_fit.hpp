#pragma once

// Stage II: GEV parameters from exceedance heights under the marked Poisson
// process model. With the cutoff u fixed the index component of the
// likelihood is constant, leaving
//
//   -log L = C(u) + sum_k [ log sigma + (1/xi + 1) log(1 + xi (h_k - mu) / sigma) ]
//
// (Gumbel branch: C(u) + sum_k [log sigma + (h_k - mu) / sigma]). No other
// constant is dropped, so values are comparable across implementations.

#include <cstddef>

#include "dtm/evt_core.hpp"
#include "dtm/exceedance.hpp"

namespace dtm {

struct FitOptions {
  std::size_t min_exceedances = kMinExceedances;
  double ftol = 1e-9;
  /// Simplex diameter tolerance, in units of (mu / sigma0, log sigma, xi).
  double xtol = 1e-10;
  std::size_t max_iterations = 2000;
};

struct FitDiagnostics {
  double neg_log_lik = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  bool restarted = false;
  GevParams init;
  std::size_t n_u_used = 0;

  friend bool operator==(const FitDiagnostics&, const FitDiagnostics&) = default;
};

struct GevFit {
  GevParams params;
  FitDiagnostics diagnostics;
};

/// +infinity when the params leave the support at u or at any height.
double neg_log_likelihood(const GevParams& params, const ExceedanceSet& e);

/// Gumbel method-of-moments start: sigma0 = sqrt(6) sd / pi,
/// mu0 = mean - gamma sigma0, xi0 = 0. Throws Error(degenerate_heights) on zero
/// spread and Error(too_few_exceedances) below two heights.
GevParams mom_init(const ExceedanceSet& e);

/// Local minimizer of neg_log_likelihood over (mu, log sigma, xi), started
/// from mom_init. Throws Error(too_few_exceedances) below opts.min_exceedances.
/// A run that does not converge is restarted once from a perturbed start; the
/// best point found is returned either way with diagnostics.converged set.
GevFit fit(const ExceedanceSet& e, const FitOptions& opts = {});

}  // namespace dtm
