#pragma once

// Unbiased block MMD^2 with a Gaussian kernel k(a, b) = exp(-|a - b|^2 / (2 h^2)):
//
//   MMD^2[X, Y] = 1 / (B (B - 1)) sum_{i != j} k(x_i, x_j) + k(y_i, y_j) - k(x_i, y_j) - k(x_j, y_i)

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dtm::apps {

using Vector = std::vector<double>;

double gaussian_kernel(std::span<const double> a, std::span<const double> b, double bandwidth);

/// Throws Error(size_mismatch) unless |X| = |Y| >= 2 with equal dimensions,
/// Error(invalid_bandwidth) unless bandwidth > 0.
double mmd_stat(std::span<const Vector> x, std::span<const Vector> y, double bandwidth);

/// Median of |a_i - a_j| over pairs i < j (the median heuristic bandwidth).
double median_pairwise_distance(std::span<const Vector> block);

/// Packed 0/1 vector; squared Euclidean distance is the Hamming distance.
class BitVector {
 public:
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool on);
  Vector to_dense() const;

  friend std::size_t hamming(const BitVector& a, const BitVector& b);

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

double median_pairwise_distance(std::span<const BitVector> block);

}  // namespace dtm::apps
