#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace fuzzysim::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kModelError = 2,
  kNonTermination = 3,
};

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> max_steps;
  int jobs = 1;
};

/// Each command reads its inputs, writes `out_path` plus
/// `out_path + ".manifest.json"`, and returns an ExitCode. Diagnostics go
/// to `err`.
int cmd_trace(const std::string& config_path, const std::string& out_path, const Options& opts, std::ostream& err);
int cmd_compare(const std::string& config_path, const std::string& out_path, const Options& opts, std::ostream& err);
/// `grid_path` may be empty when the config carries its own [grid].
int cmd_sweep(const std::string& config_path, const std::string& grid_path, const std::string& out_path,
              const Options& opts, std::ostream& err);
/// Per-step report for the run the config describes (CSV of D, S, Q).
int cmd_report(const std::string& config_path, const std::string& out_path, const Options& opts, std::ostream& err);
/// Fuzzy positions (CSV) from a segment-count observation file.
int cmd_fuzzify(const std::string& observations_path, const std::string& out_path, std::ostream& err);
/// Re-runs the command recorded in a manifest, writing to `out_path` (or
/// the recorded output when empty).
int cmd_replay(const std::string& manifest_path, const std::string& out_path, std::ostream& err);

std::string manifest_path_for(const std::string& out_path);

}  // namespace fuzzysim::cli
