#pragma once

// Extreme (max K-armed) bandit with data-driven confidence bounds on each
// arm's maximum reward. After burn_in pulls per arm, every round recomputes
// (lcb, ucb) for arms whose history changed, pulls the arm with the highest
// ucb (ties to the lowest index) and stops once that arm's lcb exceeds every
// other arm's ucb.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dtm/pipeline.hpp"
#include "dtm/random.hpp"
#include "dtm/series.hpp"

namespace dtm::apps {

struct BanditSpec {
  /// Pareto tail exponent per arm: P_k{X <= x} = 1 - x^-tail_k.
  std::vector<double> tails = {3.5, 4.0};
  double delta = 0.005;
  std::size_t burn_in = 500;
  /// 1 gives iid rewards; w > 1 gives sliding means of w iid Pareto draws.
  std::size_t window = 1;
  RngSeed seed;
  /// Reward stream seeds per arm; defaults to seed + k.
  std::vector<RngSeed> arm_seeds;
  DtmConfig dtm;
};

/// Throws Error(invalid_spec): K >= 2, tails > 0, 0 < delta < 1, window >= 1.
void validate(const BanditSpec& spec);

struct ArmBounds {
  bool valid = false;
  double lcb = 0.0;
  double ucb = 0.0;
};

struct BanditRound {
  std::size_t round = 0;
  std::vector<ArmBounds> bounds;
  /// Arm pulled after computing `bounds`; empty on the stopping round.
  std::optional<std::size_t> pulled;
  double reward = 0.0;
};

struct BanditRun {
  std::vector<BanditRound> rounds;
  std::vector<std::size_t> pulls_per_arm;
  std::vector<std::size_t> post_burn_in_pulls;
  std::size_t total_pulls = 0;
  bool stopped_early = false;
  std::vector<std::string> warnings;
};

/// Reward stream of one arm, identical to generate() on
/// moving_average(pareto(tail), window) (or pareto(tail) when window = 1).
class ArmStream {
 public:
  ArmStream(double tail, std::size_t window, RngSeed seed);
  double next();

 private:
  double tail_;
  std::size_t window_;
  Rng rng_;
  std::vector<double> recent_;  // oldest first
};

/// Requires total_pulls > K * burn_in.
BanditRun bandit_run(const BanditSpec& spec, std::size_t total_pulls);

}  // namespace dtm::apps
