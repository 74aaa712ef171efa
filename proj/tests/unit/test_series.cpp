#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dtm/error.hpp"
#include "dtm/series.hpp"

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

}  // namespace

TEST(Series, HoldsValuesInOrder) {
  Series s({3.0, -1.0, 2.5});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], 3.0);
  EXPECT_EQ(s[2], 2.5);
  EXPECT_EQ(s.max(), 3.0);
  EXPECT_EQ(std::vector<double>(s.begin(), s.end()), (std::vector<double>{3.0, -1.0, 2.5}));
}

TEST(Series, RejectsEmptyAndNonFinite) {
  EXPECT_EQ(code_of([] { Series s(std::vector<double>{}); }), ErrorCode::invalid_spec);
  EXPECT_EQ(code_of([] { Series s({1.0, std::nan("")}); }), ErrorCode::invalid_spec);
  EXPECT_EQ(code_of([] { Series s({std::numeric_limits<double>::infinity()}); }),
            ErrorCode::invalid_spec);
}

TEST(Series, SeedOffsetsAdd) {
  RngSeed s{41};
  EXPECT_EQ((s + 1).value, 42u);
  EXPECT_EQ(s + 0, s);
}

TEST(ErrorCodes, HaveStableNames) {
  EXPECT_EQ(to_string(ErrorCode::too_few_exceedances), "too-few-exceedances");
  EXPECT_EQ(to_string(ErrorCode::no_clusters), "no-clusters");
  EXPECT_EQ(to_string(ErrorCode::parse_error), "parse-error");
}
