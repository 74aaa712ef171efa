#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dtm/series.hpp"

namespace dtm {

/// Minimum number of exceedances a fitter accepts by default, and the level
/// below which callers should warn.
inline constexpr std::size_t kMinExceedances = 10;
inline constexpr std::size_t kFewExceedances = 30;

/// Samples strictly above `cutoff`. Indices are 1-based and strictly increasing.
struct ExceedanceSet {
  double cutoff = 0.0;
  std::vector<std::size_t> indices;
  std::vector<double> heights;
  std::size_t source_len = 0;

  std::size_t count() const noexcept { return indices.size(); }
};

/// Inter-exceedance times T_k = i_{k+1} - i_k and the exceedance rate n_u / n.
struct GapSet {
  std::vector<std::size_t> gaps;
  double rate = 0.0;

  /// Number of exceedances the gaps were taken from.
  std::size_t exceedances() const noexcept { return gaps.size() + 1; }
};

/// k-th smallest value with k = ceil(q n) (nearest rank, no interpolation).
double nearest_rank(std::span<const double> values, double q);

/// Nearest-rank empirical q-quantile of `s`. Throws Error(invalid_quantile) unless 0 < q < 1.
double quantile_cutoff(const Series& s, double q);

ExceedanceSet extract(const Series& s, double cutoff);

/// Throws Error(too_few_exceedances) when fewer than two exceedances.
GapSet gaps(const ExceedanceSet& e);

}  // namespace dtm
