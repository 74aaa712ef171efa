#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dtm/error.hpp"
#include "dtm/exceedance.hpp"
#include "dtm/extremal_index.hpp"
#include "dtm/generators.hpp"
#include "dtm/random.hpp"

using namespace dtm;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no dtm::Error thrown";
  return ErrorCode::parse_error;
}

// Brute-force maximizer of the mixture likelihood on {0.001, ..., 1}.
double grid_argmax(const GapSet& g, double step = 1e-3) {
  double best = step;
  double best_ll = -std::numeric_limits<double>::infinity();
  for (int i = 1; i * step <= 1.0 + 1e-12; ++i) {
    const double t = std::min(1.0, i * step);
    const double ll = theta_log_likelihood(t, g);
    if (ll > best_ll) {
      best_ll = ll;
      best = t;
    }
  }
  return best;
}

GapSet example_gaps() { return gaps({0.0, {3, 4, 10}, {1, 1, 1}, 20}); }

}  // namespace

TEST(ThetaLikelihood, FiniteAtOneWhenNoClusterGaps) {
  const GapSet g{{3, 5, 2}, 0.1};
  EXPECT_NEAR(theta_log_likelihood(1.0, g), -(0.1 * 2 + 0.1 * 4 + 0.1 * 1), 1e-15);
}

TEST(ThetaLikelihood, MinusInfinityAtOneWithClusterGaps) {
  EXPECT_EQ(theta_log_likelihood(1.0, example_gaps()), -std::numeric_limits<double>::infinity());
}

TEST(ThetaLikelihood, Domain) {
  EXPECT_EQ(code_of([] { theta_log_likelihood(0.0, example_gaps()); }), ErrorCode::invalid_theta);
  EXPECT_EQ(code_of([] { theta_log_likelihood(1.1, example_gaps()); }), ErrorCode::invalid_theta);
  EXPECT_EQ(code_of([] { theta_log_likelihood(0.5, GapSet{{}, 0.1}); }),
            ErrorCode::too_few_exceedances);
}

TEST(ThetaClosedForm, IndependentSpacingGivesOne) {
  const auto est = theta_closed_form(GapSet{{4, 9, 2, 7}, 0.05});
  EXPECT_DOUBLE_EQ(est.theta, 1.0);
  EXPECT_FALSE(est.clamped);
  EXPECT_EQ(est.n_u, 5u);
  EXPECT_EQ(est.n_c, 4u);
}

TEST(ThetaClosedForm, SmallExampleIsTheLikelihoodMaximizer) {
  const GapSet g = example_gaps();
  EXPECT_EQ(cluster_gaps(g), 1u);
  EXPECT_DOUBLE_EQ(scaled_gap_sum(g), 0.75);
  const auto est = theta_closed_form(g);
  // Root of 0.75 t^2 - 3.75 t + 2 = 0.
  EXPECT_NEAR(est.theta, (3.75 - std::sqrt(3.75 * 3.75 - 6.0)) / 1.5, 1e-14);
  EXPECT_NEAR(est.theta, 0.6070, 1e-4);
  EXPECT_NEAR(est.theta, grid_argmax(g), 1e-3);
  EXPECT_FALSE(est.clamped);
}

TEST(ThetaClosedForm, MatchesGridSearchOnRandomGapSets) {
  Rng rng(RngSeed{31});
  int checked = 0;
  while (checked < 300) {
    const std::size_t k = 1 + uniform_index(rng, 15);
    GapSet g;
    for (std::size_t i = 0; i < k; ++i) {
      g.gaps.push_back(uniform01(rng) < 0.4 ? 1 : 2 + uniform_index(rng, 40));
    }
    g.rate = 0.005 + 0.2 * uniform01(rng);
    if (cluster_gaps(g) == 0) continue;
    const auto est = theta_closed_form(g);
    ASSERT_GT(est.theta, 0.0);
    ASSERT_LE(est.theta, 1.0);
    ASSERT_NEAR(est.theta, grid_argmax(g), 2e-3);
    ++checked;
  }
}

TEST(ThetaClosedForm, NoClusterGapsIsAnError) {
  EXPECT_EQ(code_of([] { theta_closed_form(GapSet{{1, 1}, 0.15}); }), ErrorCode::no_clusters);
}

TEST(ThetaClosedForm, TimeScaleEnteringOnlyThroughScaledGaps) {
  const GapSet g{{1, 6, 1, 1, 13, 4, 1, 30}, 0.08};
  GapSet h{{}, g.rate / 2.0};
  for (auto t : g.gaps) h.gaps.push_back(2 * (t - 1) + 1);
  EXPECT_NEAR(theta_closed_form(g).theta, theta_closed_form(h).theta, 1e-14);
}

TEST(ThetaClosedForm, IidNormalNearOne) {
  const Series s = generate({GaussianAr1{0.0}, 10000, RngSeed{17}});
  const auto est = theta_closed_form(gaps(extract(s, quantile_cutoff(s, 0.99))));
  EXPECT_GE(est.theta, 0.9);
}

TEST(ThetaClosedForm, Ar1Clusters) {
  const Series s = generate({GaussianAr1{50.0}, 10000, RngSeed{17}});
  const auto est = theta_closed_form(gaps(extract(s, quantile_cutoff(s, 0.99))));
  EXPECT_NEAR(est.theta, 0.246, 0.1);
}
