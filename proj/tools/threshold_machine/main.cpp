#include <iostream>

#include <CLI11.hpp>

#include "dtm/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace dtm::cli;
  CLI::App app{"threshold_machine: data-driven thresholds for the maximum of a stationary series"};
  app.require_subcommand(1);

  ThresholdArgs th;
  auto* threshold = app.add_subcommand("threshold", "Fit a tail model to a series and report the threshold");
  threshold->add_option("--input", th.input, "CSV file with one value per line")->required();
  threshold->add_option("--alpha", th.alpha, "Exceedance probability for the maximum");
  auto* q = threshold->add_option("--quantile", th.quantile, "Cutoff as an empirical quantile");
  auto* c = threshold->add_option("--cutoff", th.cutoff, "Cutoff as an absolute value");
  q->excludes(c);
  threshold->add_option("--seed", th.seed, "Bootstrap seed");
  threshold->add_option("--bootstrap-reps", th.bootstrap_reps, "Number of bootstrap replicates");
  threshold->add_option("--min-exceedances", th.min_exceedances, "Minimum exceedances for a fit");
  threshold->add_option("--out", th.out, "Write the report here instead of stdout");
  threshold->add_option("--format", th.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Compare the fitted model with a Monte Carlo oracle");
  validate->add_option("--generator", va.generator, "Generator, e.g. gaussian_ar1(50) or chi_square(1)")->required();
  validate->add_option("-n", va.n, "Series length");
  validate->add_option("-L", va.L, "Monte Carlo paths");
  validate->add_option("--alpha", va.alpha, "Exceedance probability");
  validate->add_option("--seed", va.seed, "Seed");
  auto* vq = validate->add_option("--quantile", va.quantile, "Cutoff quantile");
  auto* vc = validate->add_option("--cutoff", va.cutoff, "Absolute cutoff");
  vq->excludes(vc);
  validate->add_option("--bootstrap-reps", va.bootstrap_reps, "Number of bootstrap replicates");
  validate->add_option("--min-exceedances", va.min_exceedances, "Minimum exceedances for a fit");
  validate->add_option("--max-gap", va.max_gap, "Sup-norm tolerance for a pass");
  validate->add_option("--out", va.out, "Write the report here instead of stdout");
  validate->add_option("--curve", va.curve, "CSV of empirical and fitted max CDFs");
  validate->add_option("--format", va.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  AppArgs ap;
  auto* appcmd = app.add_subcommand("app", "Run an application harness from a JSON spec");
  appcmd->add_option("name", ap.app, "scan, changepoint or bandit")
      ->required()
      ->check(CLI::IsMember({"scan", "changepoint", "bandit"}));
  appcmd->add_option("--spec", ap.spec_file, "JSON spec file")->required();
  appcmd->add_option("--out", ap.out_dir, "Output directory")->required();
  appcmd->add_option("--seed", ap.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  configure_logging();
  if (threshold->parsed()) return cmd_threshold(th, std::cout, std::cerr);
  if (validate->parsed()) return cmd_validate(va, std::cout, std::cerr);
  return cmd_app(ap, std::cout, std::cerr);
}
