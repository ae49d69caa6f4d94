#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzysim/comparison.hpp"
#include "fuzzysim/imprecision.hpp"
#include "fuzzysim/measures.hpp"
#include "fuzzysim/traffic_model.hpp"

namespace fuzzysim {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The step cap was hit before every vehicle left. Carries what was recorded.
class NonTerminationError : public std::runtime_error {
 public:
  NonTerminationError(const std::string& what, History partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const History& partial_history() const { return partial_; }

 private:
  History partial_;
};

enum class Strategy { AFirst, BFirst };

Strategy parse_strategy(std::string_view text);
std::string_view to_string(Strategy s);

/// Two approach lanes (A and B) sharing a one-lane work zone from opposite
/// ends. Each direction runs as its own lattice: approach cells
/// [0, lane_cells), then the work zone, with the stop line at the first
/// work-zone cell.
struct ScenarioConfig {
  std::int64_t lane_a_cells = 100;
  std::int64_t lane_b_cells = 100;
  std::int64_t workzone_cells = 20;
  std::int64_t n_a = 0;
  std::int64_t n_b = 0;
  std::int64_t precision_unit = 1;
  Ofn v_max{1, 2, 2, 3};
  AccelerationRule rule;
  std::uint64_t seed = 0;
  /// 0 selects 10 * cells * vehicles.
  std::int64_t max_steps = 0;
  Strategy strategy = Strategy::AFirst;
  InitialVelocity initial_velocity = InitialVelocity::Fused;
  /// Per-lane placement streams; derived from `seed` unless set.
  std::optional<std::uint64_t> seed_a;
  std::optional<std::uint64_t> seed_b;
  int alpha_levels = kDefaultAlphaLevels;

  /// Throws ConfigError on an infeasible configuration.
  void validate() const;
  std::int64_t resolved_max_steps() const;
  std::uint64_t lane_seed(char lane) const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct WorkZone {
  LaneState a;
  LaneState b;
  std::int64_t workzone_cells = 0;
};

/// Draws `count` distinct cells in [0, cells) from the seeded stream, sorted.
std::vector<std::int64_t> draw_cells(std::uint64_t seed, std::int64_t cells, std::int64_t count);

/// Fuzzy vehicles for one approach lane from crisp cells observed at the
/// configured precision unit, downstream-first, with both signals red.
LaneState build_approach(const ScenarioConfig& cfg, char lane, std::span<const std::int64_t> cells,
                         bool record_trace = false);

WorkZone build_scenario(const ScenarioConfig& cfg, bool record_trace = false);

struct RunResult {
  PerformanceReport report;
  History history;
  std::int64_t steps = 0;
  /// Time at which the second direction received green.
  std::int64_t switch_time = 0;
  std::int64_t entered = 0;
  std::int64_t exited = 0;
  std::vector<TraceRow> trace;
};

/// Green for the first direction; once every one of its vehicles has left
/// the work zone the other direction gets green. Ends when all have left.
RunResult run_strategy(WorkZone zone, const ScenarioConfig& cfg, Strategy strategy);
RunResult run_strategy(const ScenarioConfig& cfg, bool record_trace = false);

struct StrategyComparison {
  Ofn d1;  // AFirst
  Ofn d2;  // BFirst
  double p_12 = 0.0;  // P(D1 < D2)
  double p_21 = 0.0;  // P(D2 < D1)
  double unc = 0.0;
  PerformanceReport report1;
  PerformanceReport report2;
  ScenarioConfig config;
};

/// Runs both strategies from one shared placement and scores the choice.
StrategyComparison compare_strategies(const ScenarioConfig& cfg);

struct SweepRow {
  std::int64_t n_a = 0;
  std::int64_t n_b = 0;
  std::int64_t precision_unit = 0;
  std::uint64_t seed = 0;
  std::optional<StrategyComparison> result;
  /// "ok" or "error".
  std::string status;
  std::string message;
};

struct SweepGrid {
  std::vector<std::pair<std::int64_t, std::int64_t>> fleets;
  std::vector<std::int64_t> precision_units;
  std::vector<std::uint64_t> seeds;
};

/// One row per (fleet, precision unit, seed), in that nesting order. Failing
/// cells are reported in their row; the rest of the grid still runs.
/// `jobs` caps concurrent cells; row order does not depend on it.
std::vector<SweepRow> sweep(const ScenarioConfig& base, const SweepGrid& grid, int jobs = 1);

}  // namespace fuzzysim
