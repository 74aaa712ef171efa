#pragma once

// Reproducible random streams.
//
// Every stochastic component draws from Xoshiro256StarStar seeded through
// SplitMix64, so a stream is fully determined by one 64-bit seed and can be
// reproduced in any language from the reference algorithms
// (https://prng.di.unimi.it/xoshiro256starstar.c, splitmix64.c).
//
// Variate recipes, fixed so that other implementations can match them:
//   uniform01      (next() >> 11) * 2^-53, in [0, 1)
//   uniform_index  Lemire multiply-shift with rejection, in [0, n)
//   normal         Box-Muller cosine branch, one normal per two uniforms
//   gamma          Marsaglia-Tsang; shape < 1 boosted by U^(1/shape)

#include <cstddef>
#include <cstdint>

#include "dtm/series.hpp"

namespace dtm {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t operator()();

 private:
  std::uint64_t state_;
};

class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(RngSeed seed);

  result_type operator()();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

 private:
  std::uint64_t s_[4];
};

using Rng = Xoshiro256StarStar;

double uniform01(Rng& rng);
/// Uniform on (0, 1]; safe as an argument to log or negative powers.
double uniform_open_left(Rng& rng);
std::size_t uniform_index(Rng& rng, std::size_t n);
double standard_normal(Rng& rng);
double gamma_variate(Rng& rng, double shape);
double chi_square_variate(Rng& rng, double df);
double student_t_variate(Rng& rng, double df);
double beta_variate(Rng& rng, double a, double b);
/// Pareto with P{X <= x} = 1 - x^-tail on [1, inf).
double pareto_variate(Rng& rng, double tail);

}  // namespace dtm
