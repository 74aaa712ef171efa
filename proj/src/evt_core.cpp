#include "dtm/evt_core.hpp"

#include <cmath>
#include <sstream>

#include "dtm/error.hpp"

namespace dtm {

namespace {

std::string describe(const GevParams& p) {
  std::ostringstream os;
  os << "(mu=" << p.mu << ", sigma=" << p.sigma << ", xi=" << p.xi << ")";
  return os.str();
}

// log of the bracket 1 + xi (x - mu) / sigma, or NaN outside the support.
double log_bracket(const GevParams& p, double x) {
  const double xz = p.xi * ((x - p.mu) / p.sigma);
  if (!(xz > -1.0)) return std::nan("");
  return std::log1p(xz);
}

void check_level(double level, const char* name) {
  if (!(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCode::invalid_level, std::string(name) + " must lie in (0, 1)");
  }
}

}  // namespace

void validate(const GevParams& p) {
  if (!std::isfinite(p.mu) || !std::isfinite(p.sigma) || !std::isfinite(p.xi) ||
      !(p.sigma > 0.0)) {
    throw Error(ErrorCode::invalid_params, "invalid GEV parameters " + describe(p));
  }
}

bool is_gumbel(const GevParams& p) noexcept { return std::fabs(p.xi) < kGumbelBand; }

double gev_cdf(const GevParams& p, double x) {
  validate(p);
  if (is_gumbel(p)) return std::exp(-std::exp(-(x - p.mu) / p.sigma));
  const double lb = log_bracket(p, x);
  if (std::isnan(lb)) return p.xi > 0.0 ? 0.0 : 1.0;
  return std::exp(-std::exp(-lb / p.xi));
}

double log_tail_fn(const GevParams& p, double x) {
  validate(p);
  if (is_gumbel(p)) return -(x - p.mu) / p.sigma;
  const double lb = log_bracket(p, x);
  if (std::isnan(lb)) {
    throw Error(ErrorCode::out_of_support,
                "x=" + std::to_string(x) + " lies outside the support of " + describe(p));
  }
  return -lb / p.xi;
}

double tail_fn(const GevParams& p, double x) { return std::exp(log_tail_fn(p, x)); }

double invert_tail(const GevParams& p, double y) {
  validate(p);
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw Error(ErrorCode::invalid_target, "tail target must be positive and finite");
  }
  if (is_gumbel(p)) return p.mu - p.sigma * std::log(y);
  return p.mu + (p.sigma / p.xi) * std::expm1(-p.xi * std::log(y));
}

void validate(const TailModel& m) {
  validate(m.params);
  if (!(m.theta > 0.0 && m.theta <= 1.0)) {
    throw Error(ErrorCode::invalid_params, "extremal index must lie in (0, 1]");
  }
  if (m.horizon < 1) throw Error(ErrorCode::invalid_params, "horizon must be at least 1");
}

double model_max_cdf(const TailModel& m, double x) {
  validate(m);
  const double g = gev_cdf(m.params, x);
  if (m.theta == 1.0) return g;
  return std::pow(g, m.theta);
}

double upper_threshold(const TailModel& m, double alpha) {
  validate(m);
  check_level(alpha, "alpha");
  return invert_tail(m.params, -std::log1p(-alpha) / m.theta);
}

double lower_threshold(const TailModel& m, double delta) {
  validate(m);
  check_level(delta, "delta");
  return invert_tail(m.params, -std::log(delta) / m.theta);
}

}  // namespace dtm
