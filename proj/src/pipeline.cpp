#include "dtm/pipeline.hpp"

#include <cmath>

#include "dtm/error.hpp"
#include "dtm/exceedance.hpp"
#include "dtm/parallel.hpp"
#include "dtm/resample.hpp"

namespace dtm {

namespace {

void add_warning(std::vector<std::string>& w, const char* code) {
  for (const auto& existing : w)
    if (existing == code) return;
  w.emplace_back(code);
}

void require_exceedances(const ExceedanceSet& e, std::size_t floor, const char* stage) {
  if (e.count() < floor) {
    throw Error(ErrorCode::too_few_exceedances,
                std::string(stage) + ": " + std::to_string(e.count()) +
                    " exceedances of u=" + std::to_string(e.cutoff) + ", need at least " +
                    std::to_string(floor));
  }
}

}  // namespace

void validate(const DtmConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw Error(ErrorCode::invalid_config, "alpha must lie in (0, 1)");
  }
  if (!(cfg.cutoff_quantile > 0.0 && cfg.cutoff_quantile < 1.0)) {
    throw Error(ErrorCode::invalid_config, "cutoff quantile must lie in (0, 1)");
  }
  if (cfg.cutoff_value && !std::isfinite(*cfg.cutoff_value)) {
    throw Error(ErrorCode::invalid_config, "explicit cutoff must be finite");
  }
  if (cfg.bootstrap_reps < 1) {
    throw Error(ErrorCode::invalid_config, "bootstrap_reps must be at least 1");
  }
  if (cfg.min_exceedances < 2) {
    throw Error(ErrorCode::invalid_config, "min_exceedances must be at least 2");
  }
}

double small_sample_bound(double alpha) {
  const double tau = -std::log1p(-alpha);
  return std::exp(tau) / (tau * tau);
}

ThresholdReport fit_tail_model(const Series& s, const DtmConfig& cfg) {
  validate(cfg);
  ThresholdReport rep;
  rep.config = cfg;

  const double u = cfg.cutoff_value ? *cfg.cutoff_value : quantile_cutoff(s, cfg.cutoff_quantile);

  FitOptions fo;
  fo.min_exceedances = cfg.min_exceedances;
  auto fits = parallel_map(
      cfg.bootstrap_reps,
      [&](std::size_t b) {
        const Series iid = bootstrap(s, cfg.seed + b);
        const ExceedanceSet e = extract(iid, u);
        require_exceedances(e, cfg.min_exceedances, "bootstrap stage");
        return fit(e, fo);
      },
      cfg.threads);

  GevParams avg{0.0, 0.0, 0.0};
  bool all_converged = true;
  for (const auto& f : fits) {
    avg.mu += f.params.mu;
    avg.sigma += f.params.sigma;
    avg.xi += f.params.xi;
    all_converged = all_converged && f.diagnostics.converged;
  }
  const auto reps = static_cast<double>(fits.size());
  if (fits.size() == 1) {
    avg = fits.front().params;
  } else {
    avg = {avg.mu / reps, avg.sigma / reps, avg.xi / reps};
  }
  rep.gev_diag = fits.front().diagnostics;
  rep.gev_diag.converged = all_converged;

  const ExceedanceSet original = extract(s, u);
  require_exceedances(original, cfg.min_exceedances, "extremal index stage");
  rep.theta_est = theta_closed_form(gaps(original));

  rep.model = TailModel{avg, rep.theta_est.theta, u, s.size()};

  if (static_cast<double>(s.size()) < small_sample_bound(cfg.alpha)) {
    add_warning(rep.warnings, warning::small_sample);
  }
  if (rep.gev_diag.n_u_used < kFewExceedances || original.count() < kFewExceedances) {
    add_warning(rep.warnings, warning::few_exceedances);
  }
  if (!all_converged) add_warning(rep.warnings, warning::non_convergence);
  if (rep.theta_est.clamped) add_warning(rep.warnings, warning::theta_clamped);
  return rep;
}

ThresholdReport run_dtm(const Series& s, const DtmConfig& cfg) {
  ThresholdReport rep = fit_tail_model(s, cfg);
  rep.threshold = upper_threshold(rep.model, cfg.alpha);
  return rep;
}

double arl_to_alpha(std::size_t n, double arl) {
  if (n < 1) throw Error(ErrorCode::invalid_config, "horizon n must be at least 1");
  if (!(arl > 0.0) || !std::isfinite(arl)) {
    throw Error(ErrorCode::invalid_config, "ARL must be positive and finite");
  }
  return -std::expm1(-static_cast<double>(n) / arl);
}

ConfidenceBounds confidence_bounds(const Series& s, double delta, const DtmConfig& cfg) {
  DtmConfig c = cfg;
  c.alpha = delta;
  ConfidenceBounds out;
  out.report = run_dtm(s, c);
  out.ucb = out.report.threshold;
  out.lcb = lower_threshold(out.report.model, delta);
  return out;
}

}  // namespace dtm
