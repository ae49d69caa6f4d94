#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzysim/traffic_model.hpp"
#include "fuzzysim/workzone.hpp"

namespace fuzzysim {

/// Flat `key = value` text grouped under `[section]` headers. Sections may
/// repeat (one `[vehicle]` per vehicle). '#' starts a comment that runs to
/// the end of the line.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct ConfigSection {
  std::string name;
  int line = 0;
  std::vector<ConfigEntry> entries;
};

std::vector<ConfigSection> parse_config_text(std::string_view text);

/// An explicit lane: vehicles listed downstream-first, stepped a fixed
/// number of times.
struct LaneRunConfig {
  std::string name = "lane";
  std::int64_t cells = 0;
  std::optional<std::int64_t> signal_cell;
  std::optional<SignalColor> signal_color;
  std::int64_t steps = 0;
  AccelerationRule rule;
  std::vector<Vehicle> vehicles;
};

struct RunConfig {
  std::variant<LaneRunConfig, ScenarioConfig> model;
  std::optional<SweepGrid> grid;

  bool is_scenario() const { return std::holds_alternative<ScenarioConfig>(model); }
};

/// Throws ConfigError with a "line N" diagnostic on any malformed or unknown
/// entry.
RunConfig parse_run_config(std::string_view text);
SweepGrid parse_grid(std::string_view text);

/// Canonical text; parse_run_config(to_config_text(c)) reproduces c.
std::string to_config_text(const ScenarioConfig& cfg);
std::string to_config_text(const LaneRunConfig& cfg);
std::string to_config_text(const SweepGrid& grid);
std::string to_config_text(const RunConfig& cfg);

}  // namespace fuzzysim
