#include "dtm/cli/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <spdlog/spdlog.h>

#include "dtm/apps/bandit.hpp"
#include "dtm/apps/changepoint.hpp"
#include "dtm/apps/scan.hpp"
#include "dtm/error.hpp"
#include "dtm/generators.hpp"
#include "dtm/mc_oracle.hpp"
#include "dtm/pipeline.hpp"
#include "dtm/report_json.hpp"

namespace dtm::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error:
    case ErrorCode::invalid_config:
    case ErrorCode::invalid_spec:
    case ErrorCode::invalid_quantile:
    case ErrorCode::invalid_level:
    case ErrorCode::invalid_target:
    case ErrorCode::size_mismatch:
    case ErrorCode::invalid_bandwidth:
      return kInputError;
    default:
      return kFitFailure;
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<double> parse_double(const std::string& s) {
  double v = 0.0;
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto res = std::from_chars(begin, s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Writes to the --out file when given, else to `fallback`.
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty()) {
    fallback << text << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::parse_error, "cannot open output file '" + path + "'");
  f << text << '\n';
}

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2);
  if (format != "csv") throw Error(ErrorCode::invalid_config, "--format must be json or csv");
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : j.items()) {
    if (v.is_structured()) continue;
    os << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  if (j.contains("warnings")) {
    std::string joined;
    for (const auto& w : j.at("warnings")) joined += (joined.empty() ? "" : ";") + w.get<std::string>();
    os << "warnings," << joined << '\n';
  }
  return os.str();
}

int fail(std::ostream& out, std::ostream& err, const Error& e) {
  err << "error: " << e.what() << '\n';
  out << error_json(std::string(to_string(e.code())), e.what()).dump(2) << '\n';
  return exit_code_for(e.code());
}

// Typed field access over a JSON spec with field-named diagnostics and a
// check for unknown keys.
class SpecReader {
 public:
  SpecReader(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw Error(ErrorCode::invalid_spec, where_ + ": expected a JSON object");
  }

  template <class T>
  T get(const std::string& key, T fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    return convert<T>(key);
  }

  template <class T>
  std::optional<T> optional(const std::string& key) {
    used_.insert(key);
    if (!j_.contains(key) || j_.at(key).is_null()) return std::nullopt;
    return convert<T>(key);
  }

  const Json* raw(const std::string& key) {
    used_.insert(key);
    return j_.contains(key) ? &j_.at(key) : nullptr;
  }

  void finish() const {
    for (const auto& [k, v] : j_.items()) {
      if (!used_.count(k)) throw Error(ErrorCode::invalid_spec, where_ + ": unknown field '" + k + "'");
    }
  }

  [[noreturn]] void bad(const std::string& key, const std::string& what) const {
    throw Error(ErrorCode::invalid_spec, where_ + ": field '" + key + "': " + what);
  }

 private:
  template <class T>
  T convert(const std::string& key) {
    const Json& v = j_.at(key);
    try {
      if constexpr (std::is_same_v<T, std::size_t>) {
        if (!v.is_number_unsigned()) bad(key, "expected a non-negative integer");
      } else if constexpr (std::is_arithmetic_v<T>) {
        if (!v.is_number()) bad(key, "expected a number");
      }
      return v.get<T>();
    } catch (const nlohmann::json::exception& e) {
      bad(key, e.what());
    }
  }

  const Json& j_;
  std::string where_;
  std::set<std::string> used_;
};

Json load_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::parse_error, "cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::parse_error,
                path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

DtmConfig dtm_from_spec(SpecReader& r, RngSeed seed) {
  DtmConfig cfg;
  cfg.seed = seed;
  cfg.cutoff_quantile = r.get("cutoff_quantile", cfg.cutoff_quantile);
  cfg.cutoff_value = r.optional<double>("cutoff");
  cfg.bootstrap_reps = r.get("bootstrap_reps", cfg.bootstrap_reps);
  cfg.min_exceedances = r.get("min_exceedances", cfg.min_exceedances);
  return cfg;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  if (!f) throw Error(ErrorCode::parse_error, "cannot write '" + p.string() + "'");
  f << text;
}

int run_scan(SpecReader& r, const fs::path& dir, RngSeed seed, Json& summary) {
  apps::ErGraphSpec g;
  g.seed = seed;
  g.nodes = r.get("nodes", g.nodes);
  g.p0 = r.get("p0", g.p0);
  g.p1 = r.get("p1", g.p1);
  g.community = r.get("k", g.community);
  const auto n = r.get<std::size_t>("n_subgraphs", 5000);
  const auto reps = r.get<std::size_t>("mc_reps", 100);
  const auto alphas = r.get<std::vector<double>>("alphas", {0.1, 0.05, 0.03, 0.01});
  DtmConfig cfg = dtm_from_spec(r, seed);
  r.finish();
  if (alphas.empty()) r.bad("alphas", "expected at least one level");
  apps::validate(g);

  spdlog::info("scan: sampling {} subgraph statistics", n);
  const Series s = apps::scan_series(g, n);
  cfg.alpha = alphas.front();
  const ThresholdReport rep = run_dtm(s, cfg);

  apps::ErGraphSpec mc = g;
  mc.seed = seed + 1'000'003;
  spdlog::info("scan: {} Monte Carlo replicates", reps);
  const EmpiricalMaxDist dist = apps::scan_mc_oracle(mc, n, reps);

  Json levels = Json::array();
  for (double a : alphas) {
    levels.push_back({{"alpha", a},
                      {"dtm_threshold", upper_threshold(rep.model, a)},
                      {"mc_threshold", mc_threshold(dist, a)}});
  }
  summary["levels"] = levels;
  summary["fit"] = report_to_json(rep);

  std::ostringstream log;
  log << "index,statistic\n" << std::setprecision(17);
  for (std::size_t i = 0; i < s.size(); ++i) log << i + 1 << ',' << s[i] << '\n';
  write_text(dir / "run_log.csv", log.str());
  std::ostringstream curve;
  curve << std::setprecision(17);
  write_csv(curve, dist, &rep.model);
  write_text(dir / "cdf.csv", curve.str());
  return rep.warnings.empty() ? kSuccess : kWarnings;
}

int run_changepoint(SpecReader& r, const fs::path& dir, RngSeed seed, Json& summary) {
  apps::MmdStreamSpec spec;
  spec.seed = seed;
  spec.nodes = r.get("nodes", spec.nodes);
  spec.block = r.get("block", spec.block);
  spec.bandwidth = r.get("bandwidth", spec.bandwidth);
  spec.change_time = r.get("change_time", spec.change_time);
  spec.p_pre = r.get("p_pre", spec.p_pre);
  spec.p_post = r.get("p_post", spec.p_post);
  spec.horizon = r.get("horizon", spec.horizon);
  spec.training = r.get("training", spec.training);
  const double arl = r.get("arl", 5000.0);
  if (const Json* fm = r.raw("fixture_model")) {
    SpecReader m(*fm, "fixture_model");
    TailModel model;
    model.params.mu = m.get("mu", 0.0);
    model.params.sigma = m.get("sigma", 1.0);
    model.params.xi = m.get("xi", 0.0);
    model.theta = m.get("theta", 1.0);
    model.cutoff = m.get("cutoff", 0.0);
    model.horizon = m.get("horizon", spec.training);
    m.finish();
    spec.fixture_model = model;
  }
  spec.dtm = dtm_from_spec(r, seed);
  r.finish();
  apps::validate(spec);

  spdlog::info("changepoint: streaming {} snapshots", spec.horizon);
  const auto run = apps::change_point_run(spec, arl);
  summary["arl"] = arl;
  summary["alpha"] = run.alpha;
  summary["threshold"] = run.threshold;
  summary["model"] = run.model;
  summary["bandwidth"] = run.stream.bandwidth;
  summary["stopping_time"] =
      run.stopping_time ? Json(*run.stopping_time) : Json(nullptr);
  summary["change_time"] = spec.change_time;
  if (run.report) summary["fit"] = report_to_json(*run.report);

  std::ostringstream log;
  log << "time,statistic,threshold\n" << std::setprecision(17);
  const auto& st = run.stream.statistics;
  for (std::size_t i = 0; i < st.size(); ++i)
    log << run.stream.first_time + i << ',' << st[i] << ',' << run.threshold << '\n';
  write_text(dir / "run_log.csv", log.str());
  return (run.report && !run.report->warnings.empty()) ? kWarnings : kSuccess;
}

int run_bandit(SpecReader& r, const fs::path& dir, RngSeed seed, Json& summary) {
  apps::BanditSpec spec;
  spec.seed = seed;
  spec.tails = r.get("tails", spec.tails);
  spec.delta = r.get("delta", spec.delta);
  spec.burn_in = r.get("burn_in", spec.burn_in);
  spec.window = r.get("window", spec.window);
  const auto total = r.get<std::size_t>("total_pulls", 2 * spec.burn_in + 500);
  spec.dtm = dtm_from_spec(r, seed);
  r.finish();
  if (spec.tails.size() < 2) r.bad("tails", "bandit needs K >= 2 arms");
  apps::validate(spec);

  spdlog::info("bandit: {} arms, {} pulls", spec.tails.size(), total);
  const auto run = apps::bandit_run(spec, total);
  Json initial = Json::array();
  if (!run.rounds.empty()) {
    for (const auto& b : run.rounds.front().bounds)
      initial.push_back({{"valid", b.valid}, {"lcb", b.lcb}, {"ucb", b.ucb}});
  }
  summary["initial_bounds"] = initial;
  summary["pulls_per_arm"] = run.pulls_per_arm;
  summary["post_burn_in_pulls"] = run.post_burn_in_pulls;
  summary["total_pulls"] = run.total_pulls;
  summary["stopped_early"] = run.stopped_early;
  summary["warnings"] = run.warnings;

  std::ostringstream log;
  log << "round,pulled,reward" << std::setprecision(17);
  for (std::size_t a = 0; a < spec.tails.size(); ++a) log << ",lcb_" << a << ",ucb_" << a;
  log << '\n';
  for (const auto& rd : run.rounds) {
    log << rd.round << ',' << (rd.pulled ? std::to_string(*rd.pulled) : "") << ',' << rd.reward;
    for (const auto& b : rd.bounds) {
      if (b.valid) {
        log << ',' << b.lcb << ',' << b.ucb;
      } else {
        log << ",,";
      }
    }
    log << '\n';
  }
  write_text(dir / "run_log.csv", log.str());
  return run.warnings.empty() ? kSuccess : kWarnings;
}

}  // namespace

Series read_series_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto v = parse_double(t);
    if (!v) {
      if (!seen_content) {
        seen_content = true;  // header
        continue;
      }
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(lineno) + ": '" + t + "' is not a number");
    }
    if (!std::isfinite(*v)) {
      throw Error(ErrorCode::parse_error, "line " + std::to_string(lineno) + ": non-finite value");
    }
    seen_content = true;
    values.push_back(*v);
  }
  if (values.empty()) throw Error(ErrorCode::parse_error, "input contains no numeric values");
  return Series(std::move(values));
}

Series read_series_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::parse_error, "cannot open input file '" + path + "'");
  return read_series_csv(f);
}

int cmd_threshold(const ThresholdArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.quantile && args.cutoff) {
      throw Error(ErrorCode::invalid_config, "--quantile and --cutoff are mutually exclusive");
    }
    const Series s = read_series_file(args.input);
    DtmConfig cfg;
    cfg.alpha = args.alpha;
    if (args.quantile) cfg.cutoff_quantile = *args.quantile;
    cfg.cutoff_value = args.cutoff;
    cfg.seed = RngSeed{args.seed.value_or(0)};
    cfg.bootstrap_reps = args.bootstrap_reps;
    cfg.min_exceedances = args.min_exceedances;

    spdlog::info("threshold: {} values, alpha={}", s.size(), cfg.alpha);
    ThresholdReport rep = run_dtm(s, cfg);
    if (!args.seed) rep.warnings.emplace_back("default-seed");

    Json j = report_to_json(rep);
    Json echo = cfg;
    echo["input"] = args.input;
    j["manifest"] = make_manifest("threshold", echo, cfg.seed);
    emit(args.out, out, render(j, args.format));
    for (const auto& w : rep.warnings) err << "warning: " << w << '\n';
    return rep.warnings.empty() ? kSuccess : kWarnings;
  } catch (const Error& e) {
    return fail(out, err, e);
  }
}

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (!args.seed) throw Error(ErrorCode::invalid_config, "validate requires --seed");
    GeneratorSpec spec{parse_generator(args.generator), args.n, RngSeed{*args.seed}};
    validate(spec);
    if (args.L < 10) throw Error(ErrorCode::invalid_config, "-L must be at least 10");

    DtmConfig cfg;
    cfg.alpha = args.alpha;
    cfg.cutoff_quantile = args.quantile;
    cfg.cutoff_value = args.cutoff;
    cfg.seed = spec.seed;
    cfg.bootstrap_reps = args.bootstrap_reps;
    cfg.min_exceedances = args.min_exceedances;

    spdlog::info("validate: DTM on one path of {}", describe(spec.kind));
    const ThresholdReport rep = run_dtm(generate(spec), cfg);
    GeneratorSpec mc = spec;
    mc.seed = spec.seed + 1'000'003;
    spdlog::info("validate: {} Monte Carlo paths", args.L);
    const EmpiricalMaxDist dist = empirical_max_cdf(mc, args.L);
    const double gap = sup_norm_gap(dist, rep.model);

    Json j = {{"schema_version", kSchemaVersion},
              {"generator", describe(spec.kind)},
              {"n", args.n},
              {"L", args.L},
              {"alpha", args.alpha},
              {"dtm_threshold", rep.threshold},
              {"mc_threshold", mc_threshold(dist, args.alpha)},
              {"sup_norm_gap", gap},
              {"max_gap", args.max_gap},
              {"pass", gap <= args.max_gap},
              {"theta", rep.model.theta},
              {"xi", rep.model.params.xi},
              {"mu", rep.model.params.mu},
              {"sigma", rep.model.params.sigma},
              {"warnings", rep.warnings},
              {"report", report_to_json(rep)}};
    Json echo = cfg;
    echo["generator"] = describe(spec.kind);
    echo["n"] = args.n;
    echo["L"] = args.L;
    echo["mc_seed"] = mc.seed;
    j["manifest"] = make_manifest("validate", echo, spec.seed);
    emit(args.out, out, render(j, args.format));
    if (!args.curve.empty()) {
      std::ofstream f(args.curve);
      if (!f) throw Error(ErrorCode::parse_error, "cannot open curve file '" + args.curve + "'");
      f << std::setprecision(17);
      write_csv(f, dist, &rep.model);
    }
    return rep.warnings.empty() ? kSuccess : kWarnings;
  } catch (const Error& e) {
    return fail(out, err, e);
  }
}

int cmd_app(const AppArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (!args.seed) throw Error(ErrorCode::invalid_config, "app requires --seed");
    if (args.out_dir.empty()) throw Error(ErrorCode::invalid_config, "app requires --out");
    const Json spec = load_spec(args.spec_file);
    SpecReader reader(spec, args.spec_file);
    const fs::path dir(args.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::parse_error, "cannot create '" + dir.string() + "'");

    const RngSeed seed{*args.seed};
    Json summary = {{"schema_version", kSchemaVersion}, {"app", args.app}};
    int code = kSuccess;
    if (args.app == "scan") {
      code = run_scan(reader, dir, seed, summary);
    } else if (args.app == "changepoint") {
      code = run_changepoint(reader, dir, seed, summary);
    } else if (args.app == "bandit") {
      code = run_bandit(reader, dir, seed, summary);
    } else {
      throw Error(ErrorCode::invalid_config, "unknown app '" + args.app + "'");
    }
    Json echo = spec;
    echo["spec_file"] = args.spec_file;
    summary["manifest"] = make_manifest("app " + args.app, echo, seed);
    write_text(dir / "summary.json", summary.dump(2) + "\n");
    out << summary.dump(2) << '\n';
    return code;
  } catch (const Error& e) {
    return fail(out, err, e);
  }
}

void configure_logging() {
  const char* level = std::getenv("THRESHOLD_MACHINE_LOG");
  spdlog::set_default_logger(spdlog::default_logger());
  spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
}

}  // namespace dtm::cli
