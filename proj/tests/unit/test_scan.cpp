#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dtm/apps/scan.hpp"
#include "dtm/error.hpp"
#include "dtm/mc_oracle.hpp"
#include "dtm/pipeline.hpp"

using namespace dtm;
using namespace dtm::apps;

TEST(ScanSeries, EmptyGraph) {
  ErGraphSpec spec;
  spec.p0 = 0.0;
  for (double v : scan_series(spec, 100)) EXPECT_EQ(v, 0.0);
}

TEST(ScanSeries, CompleteGraph) {
  ErGraphSpec spec;
  spec.p0 = 1.0;
  for (double v : scan_series(spec, 100)) EXPECT_EQ(v, 45.0);
}

TEST(ScanSeries, CountsWithinRangeAndDeterministic) {
  ErGraphSpec spec;
  spec.seed = RngSeed{4};
  const Series s = scan_series(spec, 2000);
  EXPECT_EQ(s, scan_series(spec, 2000));
  double mean = 0.0;
  for (double v : s) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 45.0);
    mean += v / 2000.0;
  }
  EXPECT_NEAR(mean, 4.5, 0.5);  // 45 pairs at p0 = 0.1
}

TEST(Graph, SymmetricWithEmptyDiagonal) {
  ErGraphSpec spec;
  spec.nodes = 30;
  spec.p0 = 0.5;
  const Graph g = sample_graph(spec);
  for (std::size_t i = 0; i < 30; ++i) {
    EXPECT_FALSE(g.edge(i, i));
    for (std::size_t j = 0; j < 30; ++j) EXPECT_EQ(g.edge(i, j), g.edge(j, i));
  }
}

TEST(Graph, PlantedCommunityIsDenser) {
  ErGraphSpec spec;
  spec.seed = RngSeed{9};
  spec.p1 = 0.9;
  const Graph g = sample_graph(spec, true);
  std::vector<std::size_t> community(10);
  for (std::size_t i = 0; i < 10; ++i) community[i] = i;
  EXPECT_GT(g.edges_within(community), 25u);
}

TEST(Validate, Domains) {
  ErGraphSpec spec;
  spec.p0 = 1.5;
  EXPECT_THROW(validate(spec), Error);
  spec = {};
  spec.community = 101;
  EXPECT_THROW(validate(spec), Error);
  spec = {};
  spec.p1 = 0.05;
  EXPECT_NO_THROW(validate(spec));
  EXPECT_THROW(validate(spec, true), Error);
}

TEST(ScanOracle, MatchesBinomialApproximation) {
  // Treating the 5000 subset counts as independent Binomial(45, 0.1) gives
  // P{max <= 13} = 0.66, P{max <= 14} = 0.91, P{max <= 15} = 0.98.
  ErGraphSpec spec;
  spec.seed = RngSeed{1000};
  const auto dist = scan_mc_oracle(spec, 5000, 100);
  EXPECT_EQ(dist.size(), 100u);
  EXPECT_GE(mc_threshold(dist, 0.05), 14.0);
  EXPECT_LE(mc_threshold(dist, 0.05), 16.0);
  EXPECT_NEAR(dist.cdf(13.0), 0.66, 0.2);
}

TEST(ScanDtm, ThresholdNearTable) {
  ErGraphSpec spec;
  spec.seed = RngSeed{1};
  DtmConfig cfg;
  cfg.seed = RngSeed{1};
  const auto rep = run_dtm(scan_series(spec, 5000), cfg);
  EXPECT_NEAR(rep.threshold, 14.50, 1.5);
  EXPECT_GE(rep.model.theta, 0.8);  // distinct random subsets barely cluster
}
