#pragma once

// Brute-force reference for the distribution of max S_t: simulate L series,
// keep their maxima. Replicate j uses seed + j, so runs are reproducible and
// replicates can be generated concurrently and merged by index.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dtm/evt_core.hpp"
#include "dtm/generators.hpp"

namespace dtm {

struct EmpiricalMaxDist {
  std::vector<double> maxima;  // sorted ascending
  std::string source;

  std::size_t size() const noexcept { return maxima.size(); }
  /// Right-continuous step CDF: fraction of maxima <= x.
  double cdf(double x) const;
};

using SeriesSource = std::function<Series(RngSeed)>;

EmpiricalMaxDist empirical_max_cdf(const SeriesSource& source, RngSeed seed, std::size_t L,
                                   std::string label = {}, std::size_t threads = 0);

EmpiricalMaxDist empirical_max_cdf(const GeneratorSpec& spec, std::size_t L,
                                   std::size_t threads = 0);

/// Nearest-rank (1 - alpha) quantile of the maxima. Throws Error(invalid_level).
double mc_threshold(const EmpiricalMaxDist& dist, double alpha);

/// Kolmogorov distance between the empirical max CDF and G(x)^theta,
/// evaluated on both sides of every jump. Requires at least 10 maxima.
double sup_norm_gap(const EmpiricalMaxDist& dist, const TailModel& model);

/// Half-width of the Dvoretzky-Kiefer-Wolfowitz band for L samples at
/// confidence `confidence`: sqrt(log(2 / (1 - confidence)) / (2 L)).
double dkw_band(std::size_t L, double confidence);

/// `x,empirical_cdf,model_cdf` rows, one per maximum (model columns only when given).
void write_csv(std::ostream& os, const EmpiricalMaxDist& dist, const TailModel* model = nullptr);

}  // namespace dtm
