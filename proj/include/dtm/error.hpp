#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtm {

enum class ErrorCode {
  invalid_params,
  out_of_support,
  invalid_target,
  invalid_quantile,
  too_few_exceedances,
  degenerate_heights,
  invalid_theta,
  no_clusters,
  invalid_config,
  invalid_spec,
  invalid_level,
  size_mismatch,
  invalid_bandwidth,
  parse_error,
};

/// Stable machine-readable name, used in JSON error objects and CLI output.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dtm
