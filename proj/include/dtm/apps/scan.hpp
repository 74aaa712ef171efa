#pragma once

// Scan statistics over an Erdos-Renyi graph: for random k-node subsets G of
// one sampled graph, S = sum over pairs i < j in G of W_ij.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dtm/mc_oracle.hpp"
#include "dtm/series.hpp"

namespace dtm::apps {

struct ErGraphSpec {
  std::size_t nodes = 100;
  double p0 = 0.1;
  /// Edge probability inside the planted community (alternative hypothesis only).
  double p1 = 0.5;
  std::size_t community = 10;
  RngSeed seed;
};

/// Throws Error(invalid_spec). p0 < p1 is only required when `planted`.
void validate(const ErGraphSpec& spec, bool planted = false);

/// Symmetric 0/1 adjacency with zero diagonal, row-major nodes x nodes.
class Graph {
 public:
  explicit Graph(std::size_t nodes) : n_(nodes), adj_(nodes * nodes, 0) {}
  std::size_t nodes() const noexcept { return n_; }
  bool edge(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
  void set_edge(std::size_t i, std::size_t j, bool on);
  std::size_t edges_within(const std::vector<std::size_t>& subset) const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

/// Null graph from Bernoulli(p0) upper-triangle draws; with `planted`, pairs
/// among nodes 0..k-1 use p1 instead.
Graph sample_graph(const ErGraphSpec& spec, bool planted = false);

/// n_subgraphs statistics on one sampled graph. Each subset is k distinct
/// nodes (partial Fisher-Yates); subsets are drawn independently.
Series scan_series(const ErGraphSpec& spec, std::size_t n_subgraphs, bool planted = false);

/// Maxima of L independent null scan experiments, replicate j seeded seed + j.
EmpiricalMaxDist scan_mc_oracle(const ErGraphSpec& spec, std::size_t n_subgraphs, std::size_t L);

}  // namespace dtm::apps
