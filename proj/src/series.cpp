#include "dtm/series.hpp"

#include <algorithm>
#include <cmath>

#include "dtm/error.hpp"

namespace dtm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_params: return "invalid-params";
    case ErrorCode::out_of_support: return "out-of-support";
    case ErrorCode::invalid_target: return "invalid-target";
    case ErrorCode::invalid_quantile: return "invalid-quantile";
    case ErrorCode::too_few_exceedances: return "too-few-exceedances";
    case ErrorCode::degenerate_heights: return "degenerate-heights";
    case ErrorCode::invalid_theta: return "invalid-theta";
    case ErrorCode::no_clusters: return "no-clusters";
    case ErrorCode::invalid_config: return "invalid-config";
    case ErrorCode::invalid_spec: return "invalid-spec";
    case ErrorCode::invalid_level: return "invalid-level";
    case ErrorCode::size_mismatch: return "size-mismatch";
    case ErrorCode::invalid_bandwidth: return "invalid-bandwidth";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

Series::Series(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::invalid_spec, "series must contain at least one value");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::invalid_spec,
                  "series value at position " + std::to_string(i + 1) + " is not finite");
    }
  }
}

double Series::max() const { return *std::max_element(values_.begin(), values_.end()); }

}  // namespace dtm
