#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dtm {

struct RngSeed {
  std::uint64_t value = 0;

  friend bool operator==(RngSeed, RngSeed) = default;
  RngSeed operator+(std::uint64_t offset) const { return {value + offset}; }
};

/// Ordered, non-empty sequence of finite observations S_1..S_n.
class Series {
 public:
  /// Throws Error(invalid_spec) when empty or when any value is non-finite.
  explicit Series(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double max() const;

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace dtm
