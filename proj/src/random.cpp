#include "dtm/random.hpp"

#include <cmath>
#include <numbers>

namespace dtm {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t SplitMix64::operator()() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256StarStar::Xoshiro256StarStar(RngSeed seed) {
  SplitMix64 sm(seed.value);
  for (auto& word : s_) word = sm();
}

std::uint64_t Xoshiro256StarStar::operator()() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform_open_left(Rng& rng) { return 1.0 - uniform01(rng); }

__extension__ using Uint128 = unsigned __int128;

std::size_t uniform_index(Rng& rng, std::size_t n) {
  const auto range = static_cast<std::uint64_t>(n);
  auto product = static_cast<Uint128>(rng()) * range;
  auto low = static_cast<std::uint64_t>(product);
  if (low < range) {
    const std::uint64_t floor = -range % range;
    while (low < floor) {
      product = static_cast<Uint128>(rng()) * range;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::size_t>(product >> 64);
}

double standard_normal(Rng& rng) {
  const double u1 = uniform_open_left(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double gamma_variate(Rng& rng, double shape) {
  if (shape < 1.0) {
    const double boost = std::pow(uniform_open_left(rng), 1.0 / shape);
    return gamma_variate(rng, shape + 1.0) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double z;
    double v;
    do {
      z = standard_normal(rng);
      v = 1.0 + c * z;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open_left(rng);
    if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double chi_square_variate(Rng& rng, double df) { return 2.0 * gamma_variate(rng, 0.5 * df); }

double student_t_variate(Rng& rng, double df) {
  const double z = standard_normal(rng);
  return z / std::sqrt(chi_square_variate(rng, df) / df);
}

double beta_variate(Rng& rng, double a, double b) {
  const double x = gamma_variate(rng, a);
  const double y = gamma_variate(rng, b);
  return x / (x + y);
}

double pareto_variate(Rng& rng, double tail) {
  return std::pow(uniform_open_left(rng), -1.0 / tail);
}

}  // namespace dtm
