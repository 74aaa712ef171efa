#pragma once

// End-to-end threshold machine:
//   I   bootstrap the series into an iid copy with the same marginal,
//   II  fit GEV params on the copy's exceedances of u,
//   III estimate the extremal index from the original series' exceedances of u,
// then return x = C^-1(-(1/theta) log(1 - alpha)).
//
// The cutoff u is computed once from the original series and reused in both
// stages. The sequence is assumed stationary and mixing at extreme levels;
// that assumption is not checked.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dtm/evt_core.hpp"
#include "dtm/extremal_index.hpp"
#include "dtm/gev_fit.hpp"
#include "dtm/series.hpp"

namespace dtm {

namespace warning {
inline constexpr const char* small_sample = "small-sample";
inline constexpr const char* few_exceedances = "few-exceedances";
inline constexpr const char* non_convergence = "non-convergence";
inline constexpr const char* theta_clamped = "theta-clamped";
}  // namespace warning

struct DtmConfig {
  double alpha = 0.05;
  double cutoff_quantile = 0.95;
  /// Explicit cutoff; overrides cutoff_quantile when set.
  std::optional<double> cutoff_value;
  RngSeed seed{0};
  /// Bootstrap replicate b uses seed + b; fitted params are averaged.
  std::size_t bootstrap_reps = 1;
  std::size_t min_exceedances = kMinExceedances;
  /// Worker threads for bootstrap replicates (0 = hardware concurrency).
  std::size_t threads = 1;

  friend bool operator==(const DtmConfig&, const DtmConfig&) = default;
};

/// Throws Error(invalid_config) on alpha or q outside (0, 1), zero replicates
/// or a non-finite explicit cutoff.
void validate(const DtmConfig& cfg);

struct ThresholdReport {
  double threshold = 0.0;
  TailModel model;
  /// Replicate 0 diagnostics; `converged` is the conjunction over replicates.
  FitDiagnostics gev_diag;
  ThetaEstimate theta_est;
  std::vector<std::string> warnings;
  DtmConfig config;

  friend bool operator==(const ThresholdReport&, const ThresholdReport&) = default;
};

/// Sample size below which the level is considered poorly supported:
/// n < e^tau / tau^2 with tau = -log(1 - alpha).
double small_sample_bound(double alpha);

/// Stages I-III without the final inversion; report.threshold is left as 0.
ThresholdReport fit_tail_model(const Series& s, const DtmConfig& cfg);

ThresholdReport run_dtm(const Series& s, const DtmConfig& cfg);

/// 1 - exp(-n / arl): false-alarm probability over n steps at the given ARL.
double arl_to_alpha(std::size_t n, double arl);

struct ConfidenceBounds {
  double lcb = 0.0;
  double ucb = 0.0;
  ThresholdReport report;
};

/// ucb solves P{max > x} = delta, lcb solves P{max < x} = delta, on one fitted
/// model. lcb < ucb whenever delta < 1/2.
ConfidenceBounds confidence_bounds(const Series& s, double delta, const DtmConfig& cfg);

}  // namespace dtm
