#include "dtm/apps/mmd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "dtm/error.hpp"

namespace dtm::apps {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    d += t * t;
  }
  return d;
}

double median(std::vector<double> v) {
  if (v.empty()) throw Error(ErrorCode::size_mismatch, "median of an empty set");
  const auto mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double hi = v[mid];
  const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

}  // namespace

double gaussian_kernel(std::span<const double> a, std::span<const double> b, double bandwidth) {
  return std::exp(-squared_distance(a, b) / (2.0 * bandwidth * bandwidth));
}

double mmd_stat(std::span<const Vector> x, std::span<const Vector> y, double bandwidth) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::size_mismatch, "MMD blocks must have equal size B >= 2");
  }
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw Error(ErrorCode::invalid_bandwidth, "kernel bandwidth must be positive");
  }
  const std::size_t dim = x.front().size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != dim || y[i].size() != dim) {
      throw Error(ErrorCode::size_mismatch, "MMD vectors must share one dimension");
    }
  }
  const std::size_t b = x.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      if (i == j) continue;
      sum += gaussian_kernel(x[i], x[j], bandwidth) + gaussian_kernel(y[i], y[j], bandwidth) -
             gaussian_kernel(x[i], y[j], bandwidth) - gaussian_kernel(x[j], y[i], bandwidth);
    }
  }
  return sum / static_cast<double>(b * (b - 1));
}

double median_pairwise_distance(std::span<const Vector> block) {
  std::vector<double> d;
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      d.push_back(std::sqrt(squared_distance(block[i], block[j])));
  return median(std::move(d));
}

void BitVector::set(std::size_t i, bool on) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (on) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

Vector BitVector::to_dense() const {
  Vector v(bits_);
  for (std::size_t i = 0; i < bits_; ++i) v[i] = get(i) ? 1.0 : 0.0;
  return v;
}

std::size_t hamming(const BitVector& a, const BitVector& b) {
  std::size_t d = 0;
  for (std::size_t w = 0; w < a.words_.size(); ++w)
    d += static_cast<std::size_t>(std::popcount(a.words_[w] ^ b.words_[w]));
  return d;
}

double median_pairwise_distance(std::span<const BitVector> block) {
  std::vector<double> d;
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      d.push_back(std::sqrt(static_cast<double>(hamming(block[i], block[j]))));
  return median(std::move(d));
}

}  // namespace dtm::apps
