#include "dtm/apps/scan.hpp"

#include <numeric>

#include "dtm/error.hpp"
#include "dtm/random.hpp"

namespace dtm::apps {

void validate(const ErGraphSpec& spec, bool planted) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::invalid_spec, what); };
  if (spec.nodes < 1) bad("graph needs at least one node");
  if (!(spec.p0 >= 0.0 && spec.p0 <= 1.0)) bad("p0 must lie in [0, 1]");
  if (!(spec.p1 >= 0.0 && spec.p1 <= 1.0)) bad("p1 must lie in [0, 1]");
  if (planted && !(spec.p0 < spec.p1)) bad("planted community needs p0 < p1");
  if (spec.community < 1 || spec.community > spec.nodes) bad("community size must lie in [1, N]");
}

void Graph::set_edge(std::size_t i, std::size_t j, bool on) {
  adj_[i * n_ + j] = on;
  adj_[j * n_ + i] = on;
}

std::size_t Graph::edges_within(const std::vector<std::size_t>& subset) const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) count += edge(subset[a], subset[b]);
  return count;
}

namespace {

Graph draw_graph(Rng& rng, const ErGraphSpec& spec, bool planted) {
  Graph g(spec.nodes);
  for (std::size_t i = 0; i < spec.nodes; ++i) {
    for (std::size_t j = i + 1; j < spec.nodes; ++j) {
      const bool inside = planted && i < spec.community && j < spec.community;
      g.set_edge(i, j, uniform01(rng) < (inside ? spec.p1 : spec.p0));
    }
  }
  return g;
}

}  // namespace

Graph sample_graph(const ErGraphSpec& spec, bool planted) {
  validate(spec, planted);
  Rng rng(spec.seed);
  return draw_graph(rng, spec, planted);
}

Series scan_series(const ErGraphSpec& spec, std::size_t n_subgraphs, bool planted) {
  validate(spec, planted);
  if (n_subgraphs < 1) throw Error(ErrorCode::invalid_spec, "need at least one subgraph");
  Rng rng(spec.seed);
  const Graph g = draw_graph(rng, spec, planted);

  std::vector<std::size_t> perm(spec.nodes);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> subset(spec.community);
  std::vector<double> stats(n_subgraphs);
  for (auto& s : stats) {
    for (std::size_t i = 0; i < spec.community; ++i) {
      const std::size_t j = i + uniform_index(rng, spec.nodes - i);
      std::swap(perm[i], perm[j]);
      subset[i] = perm[i];
    }
    s = static_cast<double>(g.edges_within(subset));
  }
  return Series(std::move(stats));
}

EmpiricalMaxDist scan_mc_oracle(const ErGraphSpec& spec, std::size_t n_subgraphs, std::size_t L) {
  validate(spec);
  auto source = [&](RngSeed s) {
    ErGraphSpec rep = spec;
    rep.seed = s;
    return scan_series(rep, n_subgraphs);
  };
  return empirical_max_cdf(source, spec.seed, L, "scan");
}

}  // namespace dtm::apps
