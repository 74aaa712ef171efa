#include <gtest/gtest.h>

#include <cmath>

#include "dtm/apps/changepoint.hpp"
#include "dtm/apps/mmd.hpp"
#include "dtm/error.hpp"
#include "dtm/random.hpp"

using namespace dtm;
using namespace dtm::apps;

namespace {

MmdStreamSpec small_spec() {
  MmdStreamSpec spec;
  spec.nodes = 12;
  spec.block = 6;
  spec.change_time = 60;
  spec.horizon = 80;
  spec.training = 40;
  spec.seed = RngSeed{3};
  return spec;
}

// Dense replay of the stream's draws: reference block, then one snapshot per time.
std::vector<Vector> replay(const MmdStreamSpec& spec, std::vector<Vector>& ref) {
  const std::size_t bits = spec.nodes * (spec.nodes - 1) / 2;
  Rng rng(spec.seed);
  auto draw = [&](double p) {
    Vector v(bits);
    for (auto& c : v) c = uniform01(rng) < p ? 1.0 : 0.0;
    return v;
  };
  for (std::size_t i = 0; i < spec.block; ++i) ref.push_back(draw(spec.p_pre));
  std::vector<Vector> stream;
  for (std::size_t t = 1; t <= spec.horizon; ++t)
    stream.push_back(draw(t <= spec.change_time ? spec.p_pre : spec.p_post));
  return stream;
}

}  // namespace

TEST(MmdStream, MatchesDirectStatistic) {
  const MmdStreamSpec spec = small_spec();
  const MmdStream s = mmd_stream(spec);
  std::vector<Vector> ref;
  const auto stream = replay(spec, ref);
  EXPECT_NEAR(s.bandwidth, median_pairwise_distance(std::span<const Vector>(ref)), 1e-12);
  ASSERT_EQ(s.first_time, spec.block);
  ASSERT_EQ(s.statistics.size(), spec.horizon - spec.block + 1);
  for (std::size_t i = 0; i < s.statistics.size(); ++i) {
    const std::size_t t = s.first_time + i;
    const std::vector<Vector> window(stream.begin() + static_cast<long>(t - spec.block),
                                     stream.begin() + static_cast<long>(t));
    ASSERT_NEAR(s.statistics[i], mmd_stat(window, ref, s.bandwidth), 1e-10) << "t=" << t;
  }
}

TEST(MmdStream, FixedBandwidthIsUsed) {
  MmdStreamSpec spec = small_spec();
  spec.bandwidth = 3.0;
  EXPECT_EQ(mmd_stream(spec).bandwidth, 3.0);
}

TEST(Validate, Domains) {
  MmdStreamSpec spec = small_spec();
  spec.block = 1;
  EXPECT_THROW(validate(spec), Error);
  spec = small_spec();
  spec.horizon = 30;
  EXPECT_THROW(validate(spec), Error);
  spec = small_spec();
  spec.p_post = 1.2;
  EXPECT_THROW(validate(spec), Error);
}

TEST(ChangePointRun, FixtureThreshold) {
  MmdStreamSpec spec = small_spec();
  spec.fixture_model = TailModel{{5.717, 0.647, 0.0}, 0.306, 0.0, 2000};
  spec.training = 40;
  const auto run = change_point_run(spec, 5000.0 * 40.0 / 2000.0);
  EXPECT_NEAR(run.alpha, -std::expm1(-0.4), 1e-12);
  EXPECT_NEAR(run.threshold, 5.54, 0.01);
  EXPECT_FALSE(run.report.has_value());
}

TEST(ChangePointRun, StopsAtFirstCrossingAfterTraining) {
  MmdStreamSpec spec = small_spec();
  spec.p_post = 0.9;
  spec.dtm.cutoff_quantile = 0.75;
  const auto run = change_point_run(spec, 500.0);
  ASSERT_TRUE(run.report.has_value());
  const auto& st = run.stream.statistics;
  std::optional<std::size_t> expect;
  for (std::size_t i = spec.training; i < st.size(); ++i) {
    if (st[i] > run.threshold) {
      expect = run.stream.first_time + i;
      break;
    }
  }
  EXPECT_EQ(run.stopping_time, expect);
  ASSERT_TRUE(run.stopping_time.has_value());
  EXPECT_GT(*run.stopping_time, spec.change_time);
}
