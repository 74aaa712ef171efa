#pragma once

// Online change-point detection on a stream of random-graph snapshots.
//
// Snapshot t (1-based) is a fresh Erdos-Renyi adjacency, vectorized over the
// upper triangle, with edge probability p_pre for t <= change_time and p_post
// after. From t = B on, the statistic is MMD^2 between the last B snapshots
// and a fixed reference block of B independent pre-change snapshots. The
// threshold is fitted on the first `training` statistics at
// alpha = 1 - exp(-training / ARL), and monitoring starts right after them.

#include <cstddef>
#include <optional>

#include "dtm/evt_core.hpp"
#include "dtm/pipeline.hpp"
#include "dtm/series.hpp"

namespace dtm::apps {

struct MmdStreamSpec {
  std::size_t nodes = 100;
  std::size_t block = 50;
  /// Gaussian kernel width; 0 selects the median heuristic on the reference block.
  double bandwidth = 0.0;
  std::size_t change_time = 4000;
  double p_pre = 0.3;
  double p_post = 0.4;
  std::size_t horizon = 4500;
  std::size_t training = 2000;
  RngSeed seed;
  /// Cutoff, bootstrap and seed settings for the fit; alpha is derived from the ARL.
  DtmConfig dtm;
  /// When set, used instead of fitting on the training prefix.
  std::optional<TailModel> fixture_model;
};

/// Throws Error(invalid_spec): B >= 2, bandwidth >= 0, probabilities in [0, 1],
/// B + training <= horizon + 1.
void validate(const MmdStreamSpec& spec);

struct MmdStream {
  Series statistics;
  /// Snapshot time of statistics[0]; statistics[i] is at time first_time + i.
  std::size_t first_time = 0;
  double bandwidth = 0.0;
};

MmdStream mmd_stream(const MmdStreamSpec& spec);

struct ChangePointRun {
  std::optional<std::size_t> stopping_time;
  double threshold = 0.0;
  double alpha = 0.0;
  TailModel model;
  /// Present when the model was fitted rather than injected.
  std::optional<ThresholdReport> report;
  MmdStream stream;
};

ChangePointRun change_point_run(const MmdStreamSpec& spec, double arl);

}  // namespace dtm::apps
