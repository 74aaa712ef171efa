#pragma once

// Subcommands behind the `threshold_machine` executable. Each returns the
// process exit code and writes its report to `out` (or the --out file).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dtm/series.hpp"

namespace dtm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kWarnings = 1,
  kInputError = 2,
  kFitFailure = 3,
};

/// One value per line; a non-numeric first line is taken as a header; blank
/// lines are skipped. Throws Error(parse_error) naming the offending line.
Series read_series_csv(std::istream& in);
Series read_series_file(const std::string& path);

struct ThresholdArgs {
  std::string input;
  double alpha = 0.05;
  std::optional<double> quantile;
  std::optional<double> cutoff;
  std::optional<std::uint64_t> seed;
  std::size_t bootstrap_reps = 1;
  std::size_t min_exceedances = 10;
  std::string out;
  std::string format = "json";
};

int cmd_threshold(const ThresholdArgs& args, std::ostream& out, std::ostream& err);

struct ValidateArgs {
  std::string generator;
  std::size_t n = 10000;
  std::size_t L = 2000;
  double alpha = 0.05;
  std::optional<std::uint64_t> seed;
  double quantile = 0.99;
  std::optional<double> cutoff;
  std::size_t bootstrap_reps = 1;
  std::size_t min_exceedances = 10;
  /// Pass when sup_norm_gap <= max_gap.
  double max_gap = 0.1;
  std::string out;
  /// Optional CSV of x, empirical max CDF, fitted max CDF.
  std::string curve;
  std::string format = "json";
};

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);

struct AppArgs {
  std::string app;  // scan | changepoint | bandit
  std::string spec_file;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
};

/// Writes run_log.csv, summary.json and plot-ready CSV columns into out_dir.
int cmd_app(const AppArgs& args, std::ostream& out, std::ostream& err);

/// Applies THRESHOLD_MACHINE_LOG (trace|debug|info|warn|error|off; default warn).
void configure_logging();

}  // namespace dtm::cli
