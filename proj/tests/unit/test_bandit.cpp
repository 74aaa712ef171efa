#include <gtest/gtest.h>

#include "dtm/apps/bandit.hpp"
#include "dtm/error.hpp"
#include "dtm/generators.hpp"

using namespace dtm;
using namespace dtm::apps;

TEST(ArmStream, MatchesGenerator) {
  ArmStream iid(3.5, 1, RngSeed{7});
  const Series s = generate({ParetoDist{3.5}, 50, RngSeed{7}});
  for (double v : s) EXPECT_EQ(iid.next(), v);

  ArmStream ma(4.0, 10, RngSeed{8});
  const Series m = generate({moving_average(ParetoDist{4.0}, 10), 50, RngSeed{8}});
  for (double v : m) EXPECT_NEAR(ma.next(), v, 1e-12);
}

TEST(Validate, NeedsTwoArms) {
  BanditSpec spec;
  spec.tails = {3.5};
  try {
    validate(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_spec);
  }
  spec.tails = {3.5, -1.0};
  EXPECT_THROW(validate(spec), Error);
  spec.tails = {3.5, 4.0};
  spec.delta = 1.0;
  EXPECT_THROW(validate(spec), Error);
}

TEST(BanditRun, RequiresPullsBeyondBurnIn) {
  BanditSpec spec;
  spec.burn_in = 100;
  EXPECT_THROW(bandit_run(spec, 200), Error);
}

TEST(BanditRun, IdenticalArmsTieToLowestIndex) {
  BanditSpec spec;
  spec.tails = {3.5, 3.5};
  spec.burn_in = 200;
  spec.arm_seeds = {RngSeed{5}, RngSeed{5}};
  const auto run = bandit_run(spec, 401);
  ASSERT_EQ(run.rounds.size(), 1u);
  const auto& r = run.rounds.front();
  EXPECT_EQ(r.bounds[0].lcb, r.bounds[1].lcb);
  EXPECT_EQ(r.bounds[0].ucb, r.bounds[1].ucb);
  EXPECT_EQ(r.pulled, std::optional<std::size_t>{0});
}

TEST(BanditRun, Bookkeeping) {
  BanditSpec spec;
  spec.burn_in = 200;
  spec.seed = RngSeed{2};
  const auto run = bandit_run(spec, 500);
  std::size_t post = 0;
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_EQ(run.pulls_per_arm[a], 200 + run.post_burn_in_pulls[a]);
    post += run.post_burn_in_pulls[a];
  }
  EXPECT_EQ(run.total_pulls, 400 + post);
  if (!run.stopped_early) EXPECT_EQ(run.total_pulls, 500u);
  for (const auto& r : run.rounds) {
    if (!r.pulled) continue;
    // The pulled arm has the largest ucb among arms with bounds.
    for (std::size_t a = 0; a < 2; ++a)
      if (r.bounds[a].valid) EXPECT_GE(r.bounds[*r.pulled].ucb, r.bounds[a].ucb);
  }
}

TEST(BanditRun, BoundsAreOrderedAfterBurnIn) {
  BanditSpec spec;
  spec.seed = RngSeed{11};
  const auto run = bandit_run(spec, 1001);
  const auto& b = run.rounds.front().bounds;
  ASSERT_TRUE(b[0].valid && b[1].valid);
  EXPECT_LT(b[0].lcb, b[0].ucb);
  EXPECT_LT(b[1].lcb, b[1].ucb);
}
