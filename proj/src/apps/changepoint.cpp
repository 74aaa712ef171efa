#include "dtm/apps/changepoint.hpp"

#include <cmath>
#include <vector>

#include "dtm/apps/mmd.hpp"
#include "dtm/error.hpp"
#include "dtm/random.hpp"

namespace dtm::apps {

namespace {

BitVector snapshot(Rng& rng, std::size_t bits, double p) {
  BitVector v(bits);
  for (std::size_t i = 0; i < bits; ++i) v.set(i, uniform01(rng) < p);
  return v;
}

}  // namespace

void validate(const MmdStreamSpec& spec) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::invalid_spec, what); };
  if (spec.nodes < 2) bad("nodes must be at least 2");
  if (spec.block < 2) bad("block size B must be at least 2");
  if (!(spec.bandwidth >= 0.0) || !std::isfinite(spec.bandwidth)) bad("bandwidth must be >= 0");
  if (!(spec.p_pre >= 0.0 && spec.p_pre <= 1.0)) bad("p_pre must lie in [0, 1]");
  if (!(spec.p_post >= 0.0 && spec.p_post <= 1.0)) bad("p_post must lie in [0, 1]");
  if (spec.training < 1) bad("training prefix must be non-empty");
  if (spec.block + spec.training > spec.horizon + 1) {
    bad("horizon too short for the block size and training prefix");
  }
  if (spec.fixture_model) validate(*spec.fixture_model);
}

MmdStream mmd_stream(const MmdStreamSpec& spec) {
  validate(spec);
  const std::size_t bits = spec.nodes * (spec.nodes - 1) / 2;
  const std::size_t b = spec.block;
  Rng rng(spec.seed);

  std::vector<BitVector> ref;
  ref.reserve(b);
  for (std::size_t i = 0; i < b; ++i) ref.push_back(snapshot(rng, bits, spec.p_pre));
  const double h = spec.bandwidth > 0.0 ? spec.bandwidth
                                        : median_pairwise_distance(std::span<const BitVector>(ref));
  if (!(h > 0.0)) throw Error(ErrorCode::invalid_bandwidth, "median heuristic bandwidth is 0");
  const double inv = 1.0 / (2.0 * h * h);
  auto kernel = [inv](const BitVector& a, const BitVector& c) {
    return std::exp(-static_cast<double>(hamming(a, c)) * inv);
  };

  double syy = 0.0;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (i != j) syy += kernel(ref[i], ref[j]);

  // Ring buffers keyed by time modulo B: snapshots, kernel rows against the
  // reference block, and the window's own kernel matrix.
  std::vector<BitVector> window(b, BitVector(bits));
  std::vector<std::vector<double>> ref_row(b, std::vector<double>(b));
  std::vector<std::vector<double>> kxx(b, std::vector<double>(b, 0.0));

  std::vector<double> stats;
  stats.reserve(spec.horizon - b + 1);
  for (std::size_t t = 1; t <= spec.horizon; ++t) {
    const std::size_t slot = t % b;
    window[slot] = snapshot(rng, bits, t <= spec.change_time ? spec.p_pre : spec.p_post);
    for (std::size_t j = 0; j < b; ++j) ref_row[slot][j] = kernel(window[slot], ref[j]);
    const std::size_t filled = std::min(t, b);
    for (std::size_t back = 1; back < filled; ++back) {
      const std::size_t other = (t - back) % b;
      kxx[slot][other] = kxx[other][slot] = kernel(window[slot], window[other]);
    }
    if (t < b) continue;

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t pos = 0; pos < b; ++pos) {
      // Window position `pos` (0 = oldest) holds time t - B + 1 + pos.
      const std::size_t s = (t - b + 1 + pos) % b;
      for (std::size_t q = 0; q < b; ++q) {
        if (q == pos) continue;
        sxx += kxx[s][(t - b + 1 + q) % b];
        sxy += ref_row[s][q];
      }
    }
    stats.push_back((sxx + syy - 2.0 * sxy) / static_cast<double>(b * (b - 1)));
  }
  return {Series(std::move(stats)), b, h};
}

ChangePointRun change_point_run(const MmdStreamSpec& spec, double arl) {
  ChangePointRun run{std::nullopt, 0.0, 0.0, TailModel{}, std::nullopt, mmd_stream(spec)};
  run.alpha = arl_to_alpha(spec.training, arl);

  if (spec.fixture_model) {
    run.model = *spec.fixture_model;
  } else {
    const auto& all = run.stream.statistics.values();
    Series prefix(std::vector<double>(all.begin(),
                                      all.begin() + static_cast<std::ptrdiff_t>(spec.training)));
    DtmConfig cfg = spec.dtm;
    cfg.alpha = run.alpha;
    run.report = run_dtm(prefix, cfg);
    run.model = run.report->model;
  }
  run.threshold = upper_threshold(run.model, run.alpha);

  const auto& stats = run.stream.statistics;
  for (std::size_t i = spec.training; i < stats.size(); ++i) {
    if (stats[i] > run.threshold) {
      run.stopping_time = run.stream.first_time + i;
      break;
    }
  }
  return run;
}

}  // namespace dtm::apps
