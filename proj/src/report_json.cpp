#include "dtm/report_json.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>

#include "dtm/error.hpp"

namespace dtm {

namespace {

// JSON has no infinities; a non-finite likelihood is written as null.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double number_or_inf(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace

RunManifest make_manifest(std::string command, Json config, RngSeed seed) {
  RunManifest m;
  m.command = std::move(command);
  m.config = std::move(config);
  m.seed = seed;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  m.timestamp = buf;
  return m;
}

void to_json(Json& j, const RngSeed& s) { j = s.value; }
void from_json(const Json& j, RngSeed& s) { s.value = j.get<std::uint64_t>(); }

void to_json(Json& j, const GevParams& p) { j = {{"mu", p.mu}, {"sigma", p.sigma}, {"xi", p.xi}}; }
void from_json(const Json& j, GevParams& p) {
  p.mu = j.at("mu").get<double>();
  p.sigma = j.at("sigma").get<double>();
  p.xi = j.at("xi").get<double>();
}

void to_json(Json& j, const TailModel& m) {
  j = {{"mu", m.params.mu},       {"sigma", m.params.sigma}, {"xi", m.params.xi},
       {"theta", m.theta},        {"cutoff", m.cutoff},      {"horizon", m.horizon}};
}
void from_json(const Json& j, TailModel& m) {
  from_json(j, m.params);
  m.theta = j.at("theta").get<double>();
  m.cutoff = j.value("cutoff", 0.0);
  m.horizon = j.value("horizon", std::size_t{1});
}

void to_json(Json& j, const FitDiagnostics& d) {
  j = {{"neg_log_lik", finite_or_null(d.neg_log_lik)},
       {"iterations", d.iterations},
       {"converged", d.converged},
       {"restarted", d.restarted},
       {"init", d.init},
       {"n_u_used", d.n_u_used}};
}
void from_json(const Json& j, FitDiagnostics& d) {
  d.neg_log_lik = number_or_inf(j.at("neg_log_lik"));
  d.iterations = j.at("iterations").get<std::size_t>();
  d.converged = j.at("converged").get<bool>();
  d.restarted = j.at("restarted").get<bool>();
  d.init = j.at("init").get<GevParams>();
  d.n_u_used = j.at("n_u_used").get<std::size_t>();
}

void to_json(Json& j, const ThetaEstimate& t) {
  j = {{"theta", t.theta}, {"n_u", t.n_u}, {"n_c", t.n_c}, {"clamped", t.clamped}};
}
void from_json(const Json& j, ThetaEstimate& t) {
  t.theta = j.at("theta").get<double>();
  t.n_u = j.at("n_u").get<std::size_t>();
  t.n_c = j.at("n_c").get<std::size_t>();
  t.clamped = j.at("clamped").get<bool>();
}

void to_json(Json& j, const DtmConfig& c) {
  j = {{"alpha", c.alpha},
       {"cutoff_quantile", c.cutoff_quantile},
       {"cutoff_value", c.cutoff_value ? Json(*c.cutoff_value) : Json(nullptr)},
       {"seed", c.seed},
       {"bootstrap_reps", c.bootstrap_reps},
       {"min_exceedances", c.min_exceedances},
       {"threads", c.threads}};
}
void from_json(const Json& j, DtmConfig& c) {
  c = DtmConfig{};
  c.alpha = j.value("alpha", c.alpha);
  c.cutoff_quantile = j.value("cutoff_quantile", c.cutoff_quantile);
  if (j.contains("cutoff_value") && !j.at("cutoff_value").is_null()) {
    c.cutoff_value = j.at("cutoff_value").get<double>();
  }
  if (j.contains("seed")) c.seed = j.at("seed").get<RngSeed>();
  c.bootstrap_reps = j.value("bootstrap_reps", c.bootstrap_reps);
  c.min_exceedances = j.value("min_exceedances", c.min_exceedances);
  c.threads = j.value("threads", c.threads);
}

void to_json(Json& j, const RunManifest& m) {
  j = {{"command", m.command},
       {"config", m.config},
       {"tool_version", m.tool_version},
       {"timestamp", m.timestamp},
       {"seed", m.seed}};
}
void from_json(const Json& j, RunManifest& m) {
  m.command = j.at("command").get<std::string>();
  m.config = j.at("config");
  m.tool_version = j.at("tool_version").get<std::string>();
  m.timestamp = j.at("timestamp").get<std::string>();
  m.seed = j.at("seed").get<RngSeed>();
}

Json report_to_json(const ThresholdReport& r) {
  return {{"schema_version", kSchemaVersion},
          {"threshold", r.threshold},
          {"mu", r.model.params.mu},
          {"sigma", r.model.params.sigma},
          {"xi", r.model.params.xi},
          {"theta", r.model.theta},
          {"n", r.model.horizon},
          {"n_u", r.theta_est.n_u},
          {"cutoff", r.model.cutoff},
          {"alpha", r.config.alpha},
          {"warnings", r.warnings},
          {"seed", r.config.seed},
          {"gev_fit", r.gev_diag},
          {"extremal_index", r.theta_est},
          {"config", r.config}};
}

ThresholdReport report_from_json(const Json& j) {
  if (j.value("schema_version", 0) != kSchemaVersion) {
    throw Error(ErrorCode::parse_error, "unsupported report schema_version");
  }
  ThresholdReport r;
  r.threshold = j.at("threshold").get<double>();
  r.model.params = {j.at("mu").get<double>(), j.at("sigma").get<double>(),
                    j.at("xi").get<double>()};
  r.model.theta = j.at("theta").get<double>();
  r.model.horizon = j.at("n").get<std::size_t>();
  r.model.cutoff = j.at("cutoff").get<double>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.gev_diag = j.at("gev_fit").get<FitDiagnostics>();
  r.theta_est = j.at("extremal_index").get<ThetaEstimate>();
  r.config = j.at("config").get<DtmConfig>();
  return r;
}

Json error_json(const std::string& code, const std::string& message) {
  return {{"schema_version", kSchemaVersion}, {"error", {{"code", code}, {"message", message}}}};
}

}  // namespace dtm
