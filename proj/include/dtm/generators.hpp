#pragma once

// Synthetic sequences for accuracy studies: three iid marginals (short,
// exponential and heavy tails), Pareto rewards, the stationary Gaussian AR(1)
//
//   S_t = e^{-1/m} S_{t-1} + sqrt(1 - e^{-2/m}) Z_t,   Cov(S_t, S_t') = e^{-|t - t'| / m}
//
// (m = 0 is iid N(0, 1)) and sliding means of any of these.

#include <cstddef>
#include <memory>
#include <string>
#include <variant>

#include "dtm/series.hpp"

namespace dtm {

struct BetaDist {
  double a = 2.0;
  double b = 5.0;
};
struct ChiSquareDist {
  double df = 1.0;
};
struct StudentTDist {
  double df = 4.0;
};
struct ParetoDist {
  double tail = 3.5;
};
struct GaussianAr1 {
  double m = 0.0;
};
struct MovingAverage;

using GeneratorKind =
    std::variant<BetaDist, ChiSquareDist, StudentTDist, ParetoDist, GaussianAr1,
                 std::shared_ptr<const MovingAverage>>;

struct MovingAverage {
  GeneratorKind base;
  std::size_t window = 1;
};

GeneratorKind moving_average(GeneratorKind base, std::size_t window);

struct GeneratorSpec {
  GeneratorKind kind;
  std::size_t n = 1;
  RngSeed seed;
};

/// Throws Error(invalid_spec) on parameters outside their domains or n = 0.
void validate(const GeneratorSpec& spec);
void validate(const GeneratorKind& kind);

/// Deterministic in spec.seed.
Series generate(const GeneratorSpec& spec);

/// Compact text form, e.g. "beta(2,5)", "gaussian_ar1(50)",
/// "moving_average(pareto(3.5),10)". same_kind(parse_generator(describe(k)), k).
std::string describe(const GeneratorKind& kind);
/// Throws Error(invalid_spec) with the offending position on malformed text.
GeneratorKind parse_generator(const std::string& text);

/// Structural equality (moving averages compare their bases by value).
bool same_kind(const GeneratorKind& a, const GeneratorKind& b);

}  // namespace dtm
