#include "dtm/apps/bandit.hpp"

#include <cmath>

#include "dtm/error.hpp"

namespace dtm::apps {

void validate(const BanditSpec& spec) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::invalid_spec, what); };
  if (spec.tails.size() < 2) bad("bandit needs K >= 2 arms");
  for (double a : spec.tails)
    if (!(a > 0.0) || !std::isfinite(a)) bad("arm tail exponents must be positive");
  if (!(spec.delta > 0.0 && spec.delta < 1.0)) bad("delta must lie in (0, 1)");
  if (spec.window < 1) bad("window must be >= 1");
  if (!spec.arm_seeds.empty() && spec.arm_seeds.size() != spec.tails.size()) {
    bad("arm_seeds must list one seed per arm");
  }
}

ArmStream::ArmStream(double tail, std::size_t window, RngSeed seed)
    : tail_(tail), window_(window), rng_(seed) {
  recent_.reserve(window_);
  for (std::size_t i = 0; i + 1 < window_; ++i) recent_.push_back(pareto_variate(rng_, tail_));
}

double ArmStream::next() {
  const double draw = pareto_variate(rng_, tail_);
  if (window_ == 1) return draw;
  recent_.push_back(draw);
  double sum = 0.0;
  for (double v : recent_) sum += v;
  recent_.erase(recent_.begin());
  return sum / static_cast<double>(window_);
}

BanditRun bandit_run(const BanditSpec& spec, std::size_t total_pulls) {
  validate(spec);
  const std::size_t k = spec.tails.size();
  if (total_pulls <= k * spec.burn_in) {
    throw Error(ErrorCode::invalid_spec, "total_pulls must exceed K * burn_in");
  }

  std::vector<ArmStream> arms;
  std::vector<std::vector<double>> history(k);
  for (std::size_t a = 0; a < k; ++a) {
    const RngSeed s = spec.arm_seeds.empty() ? spec.seed + a : spec.arm_seeds[a];
    arms.emplace_back(spec.tails[a], spec.window, s);
  }

  BanditRun run;
  run.pulls_per_arm.assign(k, 0);
  run.post_burn_in_pulls.assign(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < spec.burn_in; ++i) history[a].push_back(arms[a].next());
    run.pulls_per_arm[a] = spec.burn_in;
  }
  run.total_pulls = k * spec.burn_in;

  std::vector<ArmBounds> bounds(k);
  std::vector<bool> stale(k, true);
  for (std::size_t round = 0; run.total_pulls < total_pulls; ++round) {
    for (std::size_t a = 0; a < k; ++a) {
      if (!stale[a]) continue;
      stale[a] = false;
      bounds[a] = {};
      if (history[a].empty()) continue;
      try {
        const auto cb = confidence_bounds(Series(history[a]), spec.delta, spec.dtm);
        bounds[a] = {true, cb.lcb, cb.ucb};
      } catch (const Error& e) {
        run.warnings.push_back("round " + std::to_string(round) + " arm " + std::to_string(a) +
                               " skipped: " + std::string(to_string(e.code())));
      }
    }

    BanditRound rec;
    rec.round = round;
    rec.bounds = bounds;

    std::optional<std::size_t> best;
    for (std::size_t a = 0; a < k; ++a) {
      if (bounds[a].valid && (!best || bounds[a].ucb > bounds[*best].ucb)) best = a;
    }
    if (!best) {
      // No arm has usable bounds; fall back to the least-pulled arm.
      best = 0;
      for (std::size_t a = 1; a < k; ++a)
        if (run.pulls_per_arm[a] < run.pulls_per_arm[*best]) best = a;
    } else {
      bool separated = true;
      for (std::size_t a = 0; a < k; ++a) {
        if (a == *best) continue;
        if (!bounds[a].valid || !(bounds[*best].lcb > bounds[a].ucb)) separated = false;
      }
      if (separated) {
        run.stopped_early = true;
        run.rounds.push_back(std::move(rec));
        break;
      }
    }

    const double reward = arms[*best].next();
    history[*best].push_back(reward);
    stale[*best] = true;
    ++run.pulls_per_arm[*best];
    ++run.post_burn_in_pulls[*best];
    ++run.total_pulls;
    rec.pulled = best;
    rec.reward = reward;
    run.rounds.push_back(std::move(rec));
  }
  return run;
}

}  // namespace dtm::apps
