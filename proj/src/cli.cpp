#include "fuzzysim/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "fuzzysim/config.hpp"
#include "fuzzysim/imprecision.hpp"
#include "fuzzysim/report_io.hpp"

namespace fuzzysim::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

Level log_level() {
  const char* env = std::getenv("FUZZYSIM_LOG");
  if (!env) return Level::Warn;
  const std::string v = env;
  if (v == "error" || v == "quiet") return Level::Error;
  if (v == "info") return Level::Info;
  if (v == "debug") return Level::Debug;
  return Level::Warn;
}

void log(std::ostream& err, Level level, const std::string& msg) {
  static const char* names[] = {"error", "warn", "info", "debug"};
  if (level <= log_level()) err << "fuzzysim: " << names[static_cast<int>(level)] << ": " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

void apply_overrides(RunConfig& cfg, const Options& opts) {
  if (auto* s = std::get_if<ScenarioConfig>(&cfg.model)) {
    if (opts.seed) {
      s->seed = *opts.seed;
      s->seed_a.reset();
      s->seed_b.reset();
    }
    if (opts.max_steps) s->max_steps = *opts.max_steps;
    s->validate();
  } else if (opts.max_steps) {
    auto& lane = std::get<LaneRunConfig>(cfg.model);
    if (lane.steps > *opts.max_steps) {
      throw NonTerminationError("lane run asks for " + std::to_string(lane.steps) + " steps, cap is " +
                                    std::to_string(*opts.max_steps),
                                {});
    }
  }
}

LaneState run_lane(const LaneRunConfig& cfg) {
  cfg.rule.validate();
  auto state = make_lane(cfg.name, cfg.cells, cfg.vehicles, cfg.signal_cell, true);
  if (cfg.signal_color) set_signal(state, *cfg.signal_color);
  for (std::int64_t t = 0; t < cfg.steps; ++t) advance(state, cfg.rule);
  return state;
}

std::string produce_trace(const RunConfig& cfg) {
  std::ostringstream os;
  if (const auto* s = std::get_if<ScenarioConfig>(&cfg.model)) {
    const auto run = run_strategy(*s, true);
    write_trace_csv(os, run.trace);
  } else {
    const auto state = run_lane(std::get<LaneRunConfig>(cfg.model));
    write_trace_csv(os, state.trace);
  }
  return os.str();
}

std::string produce_report(const RunConfig& cfg) {
  PerformanceReport report;
  if (const auto* s = std::get_if<ScenarioConfig>(&cfg.model)) {
    report = run_strategy(*s).report;
  } else {
    report = evaluate(run_lane(std::get<LaneRunConfig>(cfg.model)).history);
  }
  std::ostringstream os;
  write_report_csv(os, report);
  return os.str();
}

std::string produce_compare(const RunConfig& cfg) {
  const auto* s = std::get_if<ScenarioConfig>(&cfg.model);
  if (!s) throw ConfigError("line 1: compare needs a [scenario] config");
  return to_json(compare_strategies(*s)).dump(2) + "\n";
}

std::string produce_sweep(const RunConfig& cfg, int jobs, std::ostream& err) {
  const auto* s = std::get_if<ScenarioConfig>(&cfg.model);
  if (!s) throw ConfigError("line 1: sweep needs a [scenario] config");
  if (!cfg.grid) throw ConfigError("line 1: sweep needs a [grid] section or --grid file");
  const auto rows = sweep(*s, *cfg.grid, jobs);
  for (const auto& r : rows) {
    if (r.status != "ok") {
      log(err, Level::Warn,
          "cell n_a=" + std::to_string(r.n_a) + " n_b=" + std::to_string(r.n_b) + " L=" +
              std::to_string(r.precision_unit) + " seed=" + std::to_string(r.seed) + " failed: " + r.message);
    }
  }
  std::ostringstream os;
  write_sweep_csv(os, rows);
  return os.str();
}

std::string produce(const std::string& command, const RunConfig& cfg, int jobs, std::ostream& err) {
  if (command == "trace") return produce_trace(cfg);
  if (command == "compare") return produce_compare(cfg);
  if (command == "sweep") return produce_sweep(cfg, jobs, err);
  if (command == "report") return produce_report(cfg);
  throw ConfigError("line 1: unknown command '" + command + "'");
}

void write_manifest(const std::string& command, const RunConfig& cfg, int jobs, const std::string& out_path,
                    double seconds) {
  nlohmann::ordered_json m = {
      {"tool", "fuzzysim"},
      {"version", kToolVersion},
      {"command", command},
      {"config", to_config_text(cfg)},
      {"jobs", jobs},
      {"outputs", {out_path}},
      {"wall_clock_seconds", seconds},
  };
  if (const auto* s = std::get_if<ScenarioConfig>(&cfg.model)) m["seed"] = s->seed;
  write_file(manifest_path_for(out_path), m.dump(2) + "\n");
}

int execute(const std::string& command, const RunConfig& cfg, int jobs, const std::string& out_path, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const auto text = produce(command, cfg, jobs, err);
  write_file(out_path, text);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  write_manifest(command, cfg, jobs, out_path, took.count());
  log(err, Level::Info, command + " wrote " + out_path + " in " + format_double(took.count()) + " s");
  return kOk;
}

std::string produce_positions(const std::string& observations) {
  std::istringstream in(observations);
  std::ostringstream os;
  os << "# fuzzysim positions v1\nsegment_start,segment_end,vehicle,X\n";
  for (const auto& obs : read_observations_csv(in)) {
    const auto xs = fuzzify_segment(obs);
    for (std::size_t n = 0; n < xs.size(); ++n)
      os << obs.c_start << ',' << obs.c_end << ',' << n + 1 << ",\"" << xs[n].to_string() << "\"\n";
  }
  return os.str();
}

int execute_fuzzify(const std::string& observations, const std::string& out_path, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  write_file(out_path, produce_positions(observations));
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  nlohmann::ordered_json m = {
      {"tool", "fuzzysim"},
      {"version", kToolVersion},
      {"command", "fuzzify"},
      {"observations", observations},
      {"outputs", {out_path}},
      {"wall_clock_seconds", took.count()},
  };
  write_file(manifest_path_for(out_path), m.dump(2) + "\n");
  log(err, Level::Info, "fuzzify wrote " + out_path);
  return static_cast<int>(kOk);
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const NonTerminationError& e) {
    log(err, Level::Error, e.what());
    return kNonTermination;
  } catch (const ConfigError& e) {
    log(err, Level::Error, std::string("config: ") + e.what());
    return kConfigError;
  } catch (const ObservationError& e) {
    log(err, Level::Error, std::string("observations: ") + e.what());
    return kConfigError;
  } catch (const IoError& e) {
    log(err, Level::Error, e.what());
    return kConfigError;
  } catch (const nlohmann::json::exception& e) {
    log(err, Level::Error, std::string("manifest: ") + e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    log(err, Level::Error, std::string("model: ") + e.what());
    return kModelError;
  }
}

int run_command(const std::string& command, const std::string& config_path, const std::string& grid_path,
                const std::string& out_path, const Options& opts, std::ostream& err) {
  return guarded(err, [&] {
    auto cfg = parse_run_config(read_file(config_path));
    if (!grid_path.empty()) cfg.grid = parse_grid(read_file(grid_path));
    apply_overrides(cfg, opts);
    return execute(command, cfg, opts.jobs, out_path, err);
  });
}

}  // namespace

std::string manifest_path_for(const std::string& out_path) { return out_path + ".manifest.json"; }

int cmd_trace(const std::string& config_path, const std::string& out_path, const Options& opts, std::ostream& err) {
  return run_command("trace", config_path, "", out_path, opts, err);
}

int cmd_compare(const std::string& config_path, const std::string& out_path, const Options& opts, std::ostream& err) {
  return run_command("compare", config_path, "", out_path, opts, err);
}

int cmd_sweep(const std::string& config_path, const std::string& grid_path, const std::string& out_path,
              const Options& opts, std::ostream& err) {
  return run_command("sweep", config_path, grid_path, out_path, opts, err);
}

int cmd_report(const std::string& config_path, const std::string& out_path, const Options& opts, std::ostream& err) {
  return run_command("report", config_path, "", out_path, opts, err);
}

int cmd_fuzzify(const std::string& observations_path, const std::string& out_path, std::ostream& err) {
  return guarded(err, [&] { return execute_fuzzify(read_file(observations_path), out_path, err); });
}

int cmd_replay(const std::string& manifest_path, const std::string& out_path, std::ostream& err) {
  return guarded(err, [&] {
    const auto m = nlohmann::json::parse(read_file(manifest_path));
    const auto command = m.at("command").get<std::string>();
    if (command == "fuzzify") {
      const auto target = out_path.empty() ? m.at("outputs").at(0).get<std::string>() : out_path;
      return execute_fuzzify(m.at("observations").get<std::string>(), target, err);
    }
    const auto cfg = parse_run_config(m.at("config").get<std::string>());
    const auto jobs = m.at("jobs").get<int>();
    const auto target = out_path.empty() ? m.at("outputs").at(0).get<std::string>() : out_path;
    return execute(command, cfg, jobs, target, err);
  });
}

}  // namespace fuzzysim::cli
