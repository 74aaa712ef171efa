#include "dtm/extremal_index.hpp"

#include <cmath>
#include <limits>

#include "dtm/error.hpp"

namespace dtm {

namespace {

void require_gaps(const GapSet& g) {
  if (g.gaps.empty()) {
    throw Error(ErrorCode::too_few_exceedances, "extremal index needs at least one gap");
  }
}

// count * log(x) with 0 log 0 = 0.
double weighted_log(double count, double x) { return count == 0.0 ? 0.0 : count * std::log(x); }

}  // namespace

std::size_t cluster_gaps(const GapSet& g) {
  std::size_t n_c = 0;
  for (auto t : g.gaps) n_c += (t != 1);
  return n_c;
}

double scaled_gap_sum(const GapSet& g) {
  double s = 0.0;
  for (auto t : g.gaps) s += g.rate * static_cast<double>(t - 1);
  return s;
}

double theta_log_likelihood(double theta, const GapSet& g) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw Error(ErrorCode::invalid_theta, "theta must lie in (0, 1]");
  }
  require_gaps(g);
  const auto n_c = static_cast<double>(cluster_gaps(g));
  const auto zeros = static_cast<double>(g.gaps.size()) - n_c;
  return weighted_log(zeros, 1.0 - theta) + weighted_log(2.0 * n_c, theta) -
         theta * scaled_gap_sum(g);
}

ThetaEstimate theta_closed_form(const GapSet& g) {
  require_gaps(g);
  ThetaEstimate est;
  est.n_u = g.exceedances();
  est.n_c = cluster_gaps(g);
  if (est.n_c == 0) {
    throw Error(ErrorCode::no_clusters,
                "every inter-exceedance time is 1; the extremal index estimate degenerates to 0");
  }
  const double s = scaled_gap_sum(g);
  const double c = 2.0 * static_cast<double>(est.n_c);
  const double zeros = static_cast<double>(est.n_u - est.n_c - 1);
  const double b = c + zeros + s;
  const double disc = b * b - 4.0 * s * c;
  const double denom = b + std::sqrt(std::max(disc, 0.0));
  if (!(denom > 0.0)) {
    est.theta = 1.0;
    est.clamped = true;
    return est;
  }
  const double raw = 2.0 * c / denom;
  if (raw > 1.0) {
    // With Z = 0 and S <= 2 n_c the root is exactly 1; only flag real overshoot.
    est.theta = 1.0;
    est.clamped = raw > 1.0 + 1e-12;
  } else if (!(raw > 0.0)) {
    est.theta = std::numeric_limits<double>::min();
    est.clamped = true;
  } else {
    est.theta = raw;
  }
  return est;
}

}  // namespace dtm
