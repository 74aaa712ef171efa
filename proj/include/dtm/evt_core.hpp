#pragma once

// Generalized extreme value family
//
//   G(x) = exp{-C(x)},  C(x) = [1 + xi (x - mu) / sigma]^(-1/xi)   (xi != 0)
//                       C(x) = exp{-(x - mu) / sigma}              (xi == 0)
//
// defined on {x : 1 + xi (x - mu) / sigma > 0}. |xi| < kGumbelBand is treated
// as the Gumbel branch everywhere.

#include <cstddef>

namespace dtm {

inline constexpr double kGumbelBand = 1e-8;

struct GevParams {
  double mu = 0.0;
  double sigma = 1.0;
  double xi = 0.0;

  friend bool operator==(const GevParams&, const GevParams&) = default;
};

/// Throws Error(invalid_params) unless sigma > 0 and every field is finite.
void validate(const GevParams& params);

bool is_gumbel(const GevParams& params) noexcept;

/// G(x). Outside the support clamps to 0 (below a lower endpoint, xi > 0)
/// or 1 (above an upper endpoint, xi < 0).
double gev_cdf(const GevParams& params, double x);

/// C(x) = -log G(x). Throws Error(out_of_support) outside the open support.
double tail_fn(const GevParams& params, double x);

/// log C(x); same support contract as tail_fn but free of overflow.
double log_tail_fn(const GevParams& params, double x);

/// The x with C(x) = y. Throws Error(invalid_target) unless y is positive and finite.
double invert_tail(const GevParams& params, double y);

/// G(x)^theta model for the maximum of a dependent stationary sequence of
/// length `horizon`, with the GEV parameters fitted over exceedances of `cutoff`.
struct TailModel {
  GevParams params;
  double theta = 1.0;
  double cutoff = 0.0;
  std::size_t horizon = 1;

  friend bool operator==(const TailModel&, const TailModel&) = default;
};

/// Throws Error(invalid_params) on bad GEV params, theta outside (0, 1] or horizon 0.
void validate(const TailModel& model);

/// P{max <= x} = G(x)^theta.
double model_max_cdf(const TailModel& model, double x);

/// Smallest x with P{max > x} <= alpha under the model.
double upper_threshold(const TailModel& model, double alpha);

/// x with P{max < x} = delta under the model.
double lower_threshold(const TailModel& model, double delta);

}  // namespace dtm
