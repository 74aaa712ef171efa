#include "dtm/resample.hpp"

#include "dtm/random.hpp"

namespace dtm {

std::vector<std::size_t> bootstrap_indices(std::size_t n, RngSeed seed) {
  Rng rng(seed);
  std::vector<std::size_t> idx(n);
  for (auto& i : idx) i = uniform_index(rng, n);
  return idx;
}

Series bootstrap(const Series& s, RngSeed seed) {
  const auto idx = bootstrap_indices(s.size(), seed);
  std::vector<double> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(s[i]);
  return Series(std::move(out));
}

}  // namespace dtm
