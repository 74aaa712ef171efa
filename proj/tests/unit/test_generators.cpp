#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "dtm/error.hpp"
#include "dtm/generators.hpp"

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

double lag1_autocorrelation(const Series& s) {
  const double n = static_cast<double>(s.size());
  double mean = 0.0;
  for (double v : s) mean += v / n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    den += (s[i] - mean) * (s[i] - mean);
    if (i + 1 < s.size()) num += (s[i] - mean) * (s[i + 1] - mean);
  }
  return num / den;
}

}  // namespace

TEST(GaussianAr1, IidWhenMIsZero) {
  EXPECT_NEAR(lag1_autocorrelation(generate({GaussianAr1{0.0}, 10000, RngSeed{1}})), 0.0, 0.05);
}

TEST(GaussianAr1, LagOneCorrelation) {
  const Series s = generate({GaussianAr1{50.0}, 10000, RngSeed{1}});
  EXPECT_NEAR(lag1_autocorrelation(s), std::exp(-1.0 / 50.0), 0.05);
  double var = 0.0;
  for (double v : s) var += v * v / 10000.0;
  EXPECT_NEAR(var, 1.0, 0.3);  // stationary marginal N(0, 1)
}

TEST(Pareto, SupportAndMedian) {
  Series s = generate({ParetoDist{3.5}, 20001, RngSeed{2}});
  std::vector<double> v(s.begin(), s.end());
  EXPECT_GE(*std::min_element(v.begin(), v.end()), 1.0);
  std::nth_element(v.begin(), v.begin() + 10000, v.end());
  EXPECT_NEAR(v[10000], std::pow(2.0, 1.0 / 3.5), 0.05);
}

TEST(Beta, StaysInUnitInterval) {
  for (double v : generate({BetaDist{2.0, 5.0}, 5000, RngSeed{3}})) {
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1.0);
  }
}

TEST(MovingAverage, IsWindowMeanOfBase) {
  const GeneratorKind kind = moving_average(ParetoDist{4.0}, 10);
  const Series s = generate({kind, 200, RngSeed{4}});
  const Series base = generate({ParetoDist{4.0}, 209, RngSeed{4}});
  for (std::size_t t = 0; t < s.size(); ++t) {
    double sum = 0.0;
    for (std::size_t j = 0; j < 10; ++j) sum += base[t + j];
    EXPECT_NEAR(s[t], sum / 10.0, 1e-12);
  }
}

TEST(Generate, Deterministic) {
  const GeneratorSpec spec{StudentTDist{4.0}, 1000, RngSeed{5}};
  EXPECT_EQ(generate(spec), generate(spec));
  GeneratorSpec other = spec;
  other.seed = RngSeed{6};
  EXPECT_NE(generate(spec), generate(other));
}

TEST(Validate, RejectsBadParameters) {
  EXPECT_EQ(code_of([] { validate(GeneratorSpec{BetaDist{0.0, 1.0}, 10, {}}); }), ErrorCode::invalid_spec);
  EXPECT_EQ(code_of([] { validate(GeneratorSpec{ChiSquareDist{-1.0}, 10, {}}); }), ErrorCode::invalid_spec);
  EXPECT_EQ(code_of([] { validate(GeneratorSpec{GaussianAr1{-2.0}, 10, {}}); }), ErrorCode::invalid_spec);
  EXPECT_EQ(code_of([] { validate(GeneratorSpec{ParetoDist{3.0}, 0, {}}); }), ErrorCode::invalid_spec);
  EXPECT_EQ(code_of([] { validate(GeneratorSpec{moving_average(ParetoDist{3.0}, 0), 10, {}}); }),
            ErrorCode::invalid_spec);
}

TEST(Describe, RoundTrips) {
  const std::vector<GeneratorKind> kinds = {
      BetaDist{2.0, 5.0},   ChiSquareDist{1.0}, StudentTDist{4.0},
      ParetoDist{3.5},      GaussianAr1{50.0},  moving_average(ParetoDist{3.5}, 10),
      moving_average(moving_average(GaussianAr1{0.25}, 3), 2)};
  for (const auto& k : kinds) {
    const std::string text = describe(k);
    EXPECT_TRUE(same_kind(parse_generator(text), k)) << text;
  }
  EXPECT_EQ(describe(BetaDist{2.0, 5.0}), "beta(2,5)");
  EXPECT_EQ(describe(moving_average(ParetoDist{3.5}, 10)), "moving_average(pareto(3.5),10)");
  EXPECT_FALSE(same_kind(BetaDist{2.0, 5.0}, BetaDist{2.0, 4.0}));
}

TEST(Parse, AcceptsWhitespace) {
  EXPECT_TRUE(same_kind(parse_generator(" gaussian_ar1( 50 ) "), GaussianAr1{50.0}));
}

TEST(Parse, RejectsMalformedText) {
  for (const char* bad : {"", "beta(2)", "beta(2,5", "gamma(1)", "pareto(x)", "chi_square(1) extra",
                          "moving_average(pareto(3.5),1.5)"}) {
    EXPECT_EQ(code_of([&] { parse_generator(bad); }), ErrorCode::invalid_spec) << bad;
  }
}
