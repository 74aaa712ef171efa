#pragma once

// Stage III: extremal index from inter-exceedance times of the original series.
//
// Scaled gaps p_u (T_k - 1) follow, in the limit, a mixture of a point mass at
// zero (weight 1 - theta) and an exponential with rate theta (weight theta):
//
//   log L(theta) = (n_u - n_c - 1) log(1 - theta) + 2 n_c log theta
//                  - theta sum_k p_u (T_k - 1)
//
// with n_c the number of gaps with T_k > 1 and p_u = n_u / n.

#include <cstddef>

#include "dtm/exceedance.hpp"

namespace dtm {

struct ThetaEstimate {
  double theta = 1.0;
  std::size_t n_u = 0;
  std::size_t n_c = 0;
  bool clamped = false;

  friend bool operator==(const ThetaEstimate&, const ThetaEstimate&) = default;
};

/// Number of gaps with T_k - 1 != 0.
std::size_t cluster_gaps(const GapSet& g);

/// sum_k p_u (T_k - 1).
double scaled_gap_sum(const GapSet& g);

/// Mixture log-likelihood, with 0 log 0 = 0 at the boundaries (so theta = 1
/// is finite when every gap exceeds one, and -inf otherwise).
/// Throws Error(invalid_theta) outside (0, 1], Error(too_few_exceedances) on no gaps.
double theta_log_likelihood(double theta, const GapSet& g);

/// Maximizer of theta_log_likelihood over (0, 1].
///
/// Setting the score to zero gives
///   S theta^2 - (2 n_c + Z + S) theta + 2 n_c = 0,   Z = n_u - n_c - 1, S = scaled_gap_sum,
/// whose smaller root always lies in (0, 1] and is the maximizer; it is
/// evaluated as 2 c / (b + sqrt(b^2 - 4 a c)) to stay accurate as S -> 0.
/// Throws Error(no_clusters) when n_c = 0 (the likelihood increases towards theta = 0).
ThetaEstimate theta_closed_form(const GapSet& g);

}  // namespace dtm
