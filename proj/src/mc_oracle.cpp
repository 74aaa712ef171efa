#include "dtm/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "dtm/error.hpp"
#include "dtm/exceedance.hpp"
#include "dtm/parallel.hpp"

namespace dtm {

double EmpiricalMaxDist::cdf(double x) const {
  const auto it = std::upper_bound(maxima.begin(), maxima.end(), x);
  return static_cast<double>(it - maxima.begin()) / static_cast<double>(maxima.size());
}

EmpiricalMaxDist empirical_max_cdf(const SeriesSource& source, RngSeed seed, std::size_t L,
                                   std::string label, std::size_t threads) {
  if (L < 1) throw Error(ErrorCode::invalid_spec, "Monte Carlo needs at least one replicate");
  EmpiricalMaxDist dist;
  dist.source = std::move(label);
  dist.maxima = parallel_map(
      L, [&](std::size_t j) { return source(seed + j).max(); }, threads);
  std::sort(dist.maxima.begin(), dist.maxima.end());
  return dist;
}

EmpiricalMaxDist empirical_max_cdf(const GeneratorSpec& spec, std::size_t L, std::size_t threads) {
  validate(spec);
  auto source = [&spec](RngSeed s) {
    GeneratorSpec g = spec;
    g.seed = s;
    return generate(g);
  };
  return empirical_max_cdf(source, spec.seed, L, describe(spec.kind), threads);
}

double mc_threshold(const EmpiricalMaxDist& dist, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::invalid_level, "alpha must lie in (0, 1)");
  return nearest_rank(dist.maxima, 1.0 - alpha);
}

double sup_norm_gap(const EmpiricalMaxDist& dist, const TailModel& model) {
  const std::size_t L = dist.size();
  if (L < 10) throw std::invalid_argument("sup_norm_gap needs at least 10 maxima");
  double gap = 0.0;
  const auto total = static_cast<double>(L);
  std::size_t i = 0;
  while (i < L) {
    std::size_t j = i;
    while (j < L && dist.maxima[j] == dist.maxima[i]) ++j;
    const double f = model_max_cdf(model, dist.maxima[i]);
    const double below = static_cast<double>(i) / total;
    const double at = static_cast<double>(j) / total;
    gap = std::max({gap, std::fabs(at - f), std::fabs(f - below)});
    i = j;
  }
  return gap;
}

double dkw_band(std::size_t L, double confidence) {
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(L)));
}

void write_csv(std::ostream& os, const EmpiricalMaxDist& dist, const TailModel* model) {
  os << "x,empirical_cdf";
  if (model) os << ",model_cdf";
  os << '\n';
  const auto total = static_cast<double>(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double x = dist.maxima[i];
    if (i + 1 < dist.size() && dist.maxima[i + 1] == x) continue;
    os << x << ',' << static_cast<double>(i + 1) / total;
    if (model) os << ',' << model_max_cdf(*model, x);
    os << '\n';
  }
}

}  // namespace dtm
