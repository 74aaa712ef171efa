#pragma once

#include <cstddef>
#include <vector>

#include "dtm/series.hpp"

namespace dtm {

/// n indices drawn uniformly with replacement from [0, n).
std::vector<std::size_t> bootstrap_indices(std::size_t n, RngSeed seed);

/// iid resample of `s` with the same length and marginal distribution.
/// Draws are made by index, so any transform applied to the values commutes
/// with resampling under a fixed seed.
Series bootstrap(const Series& s, RngSeed seed);

}  // namespace dtm
