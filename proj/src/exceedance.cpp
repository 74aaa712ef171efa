#include "dtm/exceedance.hpp"

#include <algorithm>
#include <cmath>

#include "dtm/error.hpp"

namespace dtm {

double nearest_rank(std::span<const double> values, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorCode::invalid_quantile, "quantile level must lie in (0, 1)");
  }
  if (values.empty()) throw Error(ErrorCode::invalid_spec, "quantile of an empty sample");
  const auto n = values.size();
  // The 1e-9 slack keeps q n that is integral in exact arithmetic from being
  // pushed up one rank by representation error (0.95 * 100 and friends).
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n) - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, n);
  std::vector<double> work(values.begin(), values.end());
  std::nth_element(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(rank - 1), work.end());
  return work[rank - 1];
}

double quantile_cutoff(const Series& s, double q) { return nearest_rank(s.values(), q); }

ExceedanceSet extract(const Series& s, double cutoff) {
  ExceedanceSet e;
  e.cutoff = cutoff;
  e.source_len = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > cutoff) {
      e.indices.push_back(i + 1);
      e.heights.push_back(s[i]);
    }
  }
  return e;
}

GapSet gaps(const ExceedanceSet& e) {
  if (e.count() < 2) {
    throw Error(ErrorCode::too_few_exceedances,
                "inter-exceedance times need at least two exceedances, got " +
                    std::to_string(e.count()));
  }
  GapSet g;
  g.gaps.reserve(e.count() - 1);
  for (std::size_t k = 0; k + 1 < e.count(); ++k) g.gaps.push_back(e.indices[k + 1] - e.indices[k]);
  g.rate = static_cast<double>(e.count()) / static_cast<double>(e.source_len);
  return g;
}

}  // namespace dtm
