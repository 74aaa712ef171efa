#pragma once

// JSON encodings shared by the CLI and harness outputs. Reports carry
// `schema_version`; decoding a report produced by emit() yields an equal value.

#include <string>

#include <json.hpp>

#include "dtm/evt_core.hpp"
#include "dtm/extremal_index.hpp"
#include "dtm/gev_fit.hpp"
#include "dtm/pipeline.hpp"

namespace dtm {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::json;

struct RunManifest {
  std::string command;
  Json config = Json::object();
  std::string tool_version = kToolVersion;
  std::string timestamp;
  RngSeed seed;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

/// Manifest stamped with the current UTC time (ISO 8601).
RunManifest make_manifest(std::string command, Json config, RngSeed seed);

void to_json(Json& j, const RngSeed& s);
void from_json(const Json& j, RngSeed& s);
void to_json(Json& j, const GevParams& p);
void from_json(const Json& j, GevParams& p);
void to_json(Json& j, const TailModel& m);
void from_json(const Json& j, TailModel& m);
void to_json(Json& j, const FitDiagnostics& d);
void from_json(const Json& j, FitDiagnostics& d);
void to_json(Json& j, const ThetaEstimate& t);
void from_json(const Json& j, ThetaEstimate& t);
void to_json(Json& j, const DtmConfig& c);
void from_json(const Json& j, DtmConfig& c);
void to_json(Json& j, const RunManifest& m);
void from_json(const Json& j, RunManifest& m);

/// Flat threshold report: threshold, mu, sigma, xi, theta, n, n_u, cutoff,
/// alpha, warnings, seed, plus nested fit/extremal-index/config detail.
Json report_to_json(const ThresholdReport& r);
ThresholdReport report_from_json(const Json& j);

Json error_json(const std::string& code, const std::string& message);

}  // namespace dtm
