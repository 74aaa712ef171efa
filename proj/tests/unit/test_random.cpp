#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "dtm/random.hpp"

using namespace dtm;

namespace {

// Kolmogorov statistic of `draws` against `cdf`.
template <class Cdf>
double ks_distance(std::vector<double> draws, Cdf cdf) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double f = cdf(draws[i]);
    d = std::max({d, std::abs(f - i / n), std::abs((i + 1) / n - f)});
  }
  return d;
}

template <class Draw>
std::vector<double> sample(Draw draw, std::size_t n, std::uint64_t seed) {
  Rng rng(RngSeed{seed});
  std::vector<double> out(n);
  for (auto& v : out) v = draw(rng);
  return out;
}

// 99.9% Kolmogorov critical value for n = 20000.
constexpr double kKsCrit = 1.95 / 141.42;

}  // namespace

TEST(SplitMix64, MatchesReferenceOutput) {
  SplitMix64 sm(1234567);
  EXPECT_EQ(sm(), 6457827717110365317ULL);
  EXPECT_EQ(sm(), 3203168211198807973ULL);
}

TEST(Xoshiro, IsDeterministicInSeed) {
  Rng a(RngSeed{7}), b(RngSeed{7}), c(RngSeed{8});
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    differs |= x != c();
  }
  EXPECT_TRUE(differs);
}

TEST(Uniform, StaysInRange) {
  Rng rng(RngSeed{1});
  for (int i = 0; i < 100000; ++i) {
    const double u = uniform01(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double v = uniform_open_left(rng);
    ASSERT_GT(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
}

TEST(UniformIndex, CoversRangeEvenly) {
  Rng rng(RngSeed{2});
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[uniform_index(rng, 7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 400);
}

TEST(Normal, MatchesStandardNormal) {
  const auto d = sample(standard_normal, 20000, 3);
  boost::math::normal_distribution<> nd;
  EXPECT_LT(ks_distance(d, [&](double x) { return cdf(nd, x); }), kKsCrit);
}

TEST(Gamma, ChiSquareMatchesForSmallAndLargeShape) {
  for (double df : {1.0, 3.0, 10.0}) {
    const auto d = sample([df](Rng& r) { return chi_square_variate(r, df); }, 20000, 40 + static_cast<std::uint64_t>(df));
    boost::math::chi_squared_distribution<> cd(df);
    EXPECT_LT(ks_distance(d, [&](double x) { return cdf(cd, x); }), kKsCrit) << "df=" << df;
  }
}

TEST(StudentT, MatchesT4) {
  const auto d = sample([](Rng& r) { return student_t_variate(r, 4.0); }, 20000, 5);
  boost::math::students_t_distribution<> td(4.0);
  EXPECT_LT(ks_distance(d, [&](double x) { return cdf(td, x); }), kKsCrit);
}

TEST(Beta, MatchesBeta25) {
  const auto d = sample([](Rng& r) { return beta_variate(r, 2.0, 5.0); }, 20000, 6);
  boost::math::beta_distribution<> bd(2.0, 5.0);
  EXPECT_LT(ks_distance(d, [&](double x) { return cdf(bd, x); }), kKsCrit);
}

TEST(Pareto, MatchesPowerTail) {
  const auto d = sample([](Rng& r) { return pareto_variate(r, 3.5); }, 20000, 7);
  EXPECT_GE(*std::min_element(d.begin(), d.end()), 1.0);
  EXPECT_LT(ks_distance(d, [](double x) { return 1.0 - std::pow(x, -3.5); }), kKsCrit);
}
