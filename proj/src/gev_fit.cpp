#include "dtm/gev_fit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "dtm/error.hpp"
#include "dtm/nelder_mead.hpp"

namespace dtm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Initial simplex edge lengths in (mu / sigma0, log sigma, xi).
const std::vector<double> kSteps = {1.0, 0.3, 0.1};

struct Start {
  double mu_offset;  // in units of sigma0
  double log_scale;
  double xi;
};

GevParams decode(const GevParams& init, const std::vector<double>& v) {
  return {init.mu + init.sigma * v[0], init.sigma * std::exp(v[1]), v[2]};
}

SimplexResult run(const ExceedanceSet& e, const GevParams& init, const Start& start,
                  const FitOptions& opts) {
  auto objective = [&](const std::vector<double>& v) {
    return neg_log_likelihood(decode(init, v), e);
  };
  SimplexOptions so;
  so.ftol = opts.ftol;
  so.xtol = opts.xtol;
  so.max_iterations = opts.max_iterations;
  return nelder_mead(objective, {start.mu_offset, start.log_scale, start.xi}, kSteps, so);
}

}  // namespace

double neg_log_likelihood(const GevParams& p, const ExceedanceSet& e) {
  if (!(p.sigma > 0.0) || !std::isfinite(p.sigma) || !std::isfinite(p.mu) ||
      !std::isfinite(p.xi)) {
    return kInf;
  }
  const double log_sigma = std::log(p.sigma);
  const auto n_u = static_cast<double>(e.heights.size());
  if (is_gumbel(p)) {
    double sum = 0.0;
    for (double h : e.heights) sum += (h - p.mu) / p.sigma;
    return std::exp(-(e.cutoff - p.mu) / p.sigma) + n_u * log_sigma + sum;
  }
  const double zu = p.xi * ((e.cutoff - p.mu) / p.sigma);
  if (!(zu > -1.0)) return kInf;
  double sum = 0.0;
  for (double h : e.heights) {
    const double z = p.xi * ((h - p.mu) / p.sigma);
    if (!(z > -1.0)) return kInf;
    sum += std::log1p(z);
  }
  const double c_u = std::exp(-std::log1p(zu) / p.xi);
  const double value = c_u + n_u * log_sigma + (1.0 / p.xi + 1.0) * sum;
  return std::isnan(value) ? kInf : value;
}

GevParams mom_init(const ExceedanceSet& e) {
  const auto& h = e.heights;
  if (h.size() < 2) {
    throw Error(ErrorCode::too_few_exceedances, "moment initialization needs two heights");
  }
  const double n = static_cast<double>(h.size());
  const double mean = std::accumulate(h.begin(), h.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : h) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  if (!(sd > 0.0)) throw Error(ErrorCode::degenerate_heights, "exceedance heights are all equal");
  const double sigma = std::sqrt(6.0) * sd / std::numbers::pi;
  return {mean - std::numbers::egamma * sigma, sigma, 0.0};
}

GevFit fit(const ExceedanceSet& e, const FitOptions& opts) {
  if (e.count() < opts.min_exceedances || e.count() < 2) {
    throw Error(ErrorCode::too_few_exceedances,
                "GEV fit needs at least " + std::to_string(opts.min_exceedances) +
                    " exceedances, got " + std::to_string(e.count()));
  }
  const GevParams init = mom_init(e);

  SimplexResult best = run(e, init, {0.0, 0.0, 0.0}, opts);
  bool restarted = false;
  std::size_t iterations = best.iterations;
  if (!best.converged) {
    restarted = true;
    Start perturbed{0.0, std::log(1.1), 0.1};
    if (!std::isfinite(neg_log_likelihood(decode(init, {0.0, perturbed.log_scale, 0.1}), e))) {
      perturbed.xi = -0.1;
    }
    SimplexResult retry = run(e, init, perturbed, opts);
    iterations += retry.iterations;
    if (retry.f < best.f || (retry.converged && retry.f <= best.f)) best = std::move(retry);
  }
  // A collapsed simplex can stall short of the minimum; rebuild it at the best point.
  for (int polish = 0; polish < 5 && best.converged; ++polish) {
    SimplexResult again = run(e, init, {best.x[0], best.x[1], best.x[2]}, opts);
    iterations += again.iterations;
    const bool improved = again.f < best.f;
    if (again.f <= best.f) best = std::move(again);
    if (!improved) break;
  }

  GevFit out;
  out.params = decode(init, best.x);
  out.diagnostics.neg_log_lik = best.f;
  out.diagnostics.iterations = iterations;
  out.diagnostics.converged = best.converged && std::isfinite(best.f);
  out.diagnostics.restarted = restarted;
  out.diagnostics.init = init;
  out.diagnostics.n_u_used = e.count();
  return out;
}

}  // namespace dtm
