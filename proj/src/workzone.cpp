#include "fuzzysim/workzone.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

namespace fuzzysim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unbiased draw in [0, bound). std::uniform_int_distribution is not
// specified bit-for-bit, so the rejection step is spelled out here.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % bound;
  }
}

bool touches_workzone(const LaneState& lane, std::int64_t entry, std::int64_t cells) {
  return std::any_of(lane.vehicles.begin(), lane.vehicles.end(), [&](const Vehicle& v) {
    return !v.phantom && v.position.max_component() >= entry && v.position.min_component() < entry + cells;
  });
}

}  // namespace

Strategy parse_strategy(std::string_view text) {
  if (text == "AFirst" || text == "a_first" || text == "A") return Strategy::AFirst;
  if (text == "BFirst" || text == "b_first" || text == "B") return Strategy::BFirst;
  throw ConfigError("strategy must be AFirst or BFirst, got '" + std::string(text) + "'");
}

std::string_view to_string(Strategy s) { return s == Strategy::AFirst ? "AFirst" : "BFirst"; }

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (lane_a_cells < 1 || lane_b_cells < 1) fail("lane lengths must be positive");
  if (workzone_cells < 1) fail("work zone must have at least one cell");
  if (n_a < 0 || n_b < 0) fail("vehicle counts must be non-negative");
  if (n_a > lane_a_cells) fail("n_a = " + std::to_string(n_a) + " exceeds lane A's " + std::to_string(lane_a_cells) + " cells");
  if (n_b > lane_b_cells) fail("n_b = " + std::to_string(n_b) + " exceeds lane B's " + std::to_string(lane_b_cells) + " cells");
  if (precision_unit < 1) fail("precision unit must be >= 1");
  if (v_max.min_component() < 0) fail("v_max must be componentwise non-negative");
  if (rule.high.min_component() < 0 || rule.low.min_component() < 0) fail("acceleration values must be non-negative");
  if (max_steps < 0) fail("max_steps must be >= 0");
  if (alpha_levels < 2) fail("alpha_levels must be >= 2");
}

std::int64_t ScenarioConfig::resolved_max_steps() const {
  if (max_steps > 0) return max_steps;
  const auto cells = std::max(lane_a_cells, lane_b_cells) + workzone_cells;
  return 10 * cells * std::max<std::int64_t>(1, n_a + n_b);
}

std::uint64_t ScenarioConfig::lane_seed(char lane) const {
  if (lane == 'A' && seed_a) return *seed_a;
  if (lane == 'B' && seed_b) return *seed_b;
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(lane)));
}

std::vector<std::int64_t> draw_cells(std::uint64_t seed, std::int64_t cells, std::int64_t count) {
  if (count < 0 || count > cells) throw ConfigError("cannot place " + std::to_string(count) + " vehicles in " + std::to_string(cells) + " cells");
  std::mt19937_64 gen(seed);
  std::vector<std::int64_t> pool(static_cast<std::size_t>(cells));
  std::iota(pool.begin(), pool.end(), 0);
  for (std::int64_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::int64_t>(bounded(gen, static_cast<std::uint64_t>(cells - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

LaneState build_approach(const ScenarioConfig& cfg, char lane, std::span<const std::int64_t> cells, bool record_trace) {
  const auto approach = lane == 'A' ? cfg.lane_a_cells : cfg.lane_b_cells;
  const std::string name(1, lane);

  std::vector<Vehicle> vehicles;
  vehicles.push_back(Vehicle::make_phantom(name + ":signal", approach, name));
  for (const auto& obs : aggregate_counts(cells, approach, cfg.precision_unit, cfg.v_max)) {
    for (const auto& x : fuzzify_segment(obs)) {
      Vehicle v;
      v.id = name + std::to_string(vehicles.size());
      v.position = x;
      v.v_max = cfg.v_max;
      v.origin_lane = name;
      // Start no faster than the free space ahead allows.
      v.velocity = min_ofn(initial_velocity(cfg.v_max, cfg.initial_velocity), gap(vehicles.back(), v), cfg.v_max);
      vehicles.push_back(std::move(v));
    }
  }
  return make_lane(name, approach + cfg.workzone_cells, std::move(vehicles), approach, record_trace);
}

WorkZone build_scenario(const ScenarioConfig& cfg, bool record_trace) {
  cfg.validate();
  const auto cells_a = draw_cells(cfg.lane_seed('A'), cfg.lane_a_cells, cfg.n_a);
  const auto cells_b = draw_cells(cfg.lane_seed('B'), cfg.lane_b_cells, cfg.n_b);
  return {build_approach(cfg, 'A', cells_a, record_trace), build_approach(cfg, 'B', cells_b, record_trace),
          cfg.workzone_cells};
}

RunResult run_strategy(WorkZone zone, const ScenarioConfig& cfg, Strategy strategy) {
  cfg.rule.validate();
  auto& first = strategy == Strategy::AFirst ? zone.a : zone.b;
  auto& second = strategy == Strategy::AFirst ? zone.b : zone.a;
  const auto limit = cfg.resolved_max_steps();

  RunResult out;
  out.entered = static_cast<std::int64_t>(active_vehicles(zone.a) + active_vehicles(zone.b));
  set_signal(first, SignalColor::Green);
  bool second_green = false;
  std::int64_t steps = 0;
  while (true) {
    if (!second_green && active_vehicles(first) == 0) {
      set_signal(second, SignalColor::Green);
      second_green = true;
      out.switch_time = steps;
    }
    if (active_vehicles(zone.a) + active_vehicles(zone.b) == 0) break;
    if (steps >= limit) {
      throw NonTerminationError("run did not finish within " + std::to_string(limit) + " steps",
                                merge(zone.a.history, zone.b.history));
    }
    advance(zone.a, cfg.rule);
    advance(zone.b, cfg.rule);
    ++steps;
    const auto entry_a = zone.a.signal_cell.value_or(0);
    const auto entry_b = zone.b.signal_cell.value_or(0);
    if (touches_workzone(zone.a, entry_a, zone.workzone_cells) && touches_workzone(zone.b, entry_b, zone.workzone_cells)) {
      throw ModelError("opposing vehicles inside the work zone at t=" + std::to_string(steps));
    }
  }

  out.steps = steps;
  out.exited = zone.a.exited + zone.b.exited;
  out.history = merge(std::move(zone.a.history), zone.b.history);
  out.report = evaluate(out.history);
  if (zone.a.record_trace || zone.b.record_trace) {
    out.trace = std::move(zone.a.trace);
    out.trace.insert(out.trace.end(), zone.b.trace.begin(), zone.b.trace.end());
    std::stable_sort(out.trace.begin(), out.trace.end(), [](const TraceRow& l, const TraceRow& r) { return l.t < r.t; });
  }
  return out;
}

RunResult run_strategy(const ScenarioConfig& cfg, bool record_trace) {
  return run_strategy(build_scenario(cfg, record_trace), cfg, cfg.strategy);
}

StrategyComparison compare_strategies(const ScenarioConfig& cfg) {
  const auto zone = build_scenario(cfg);
  const auto r1 = run_strategy(zone, cfg, Strategy::AFirst);
  const auto r2 = run_strategy(zone, cfg, Strategy::BFirst);
  StrategyComparison c;
  c.report1 = r1.report;
  c.report2 = r2.report;
  c.d1 = r1.report.delay;
  c.d2 = r2.report.delay;
  const auto p = prob_less(c.d1, c.d2, cfg.alpha_levels);
  c.p_12 = p.p_less;
  c.p_21 = p.p_greater;
  c.unc = uncertainty(c.p_12, c.p_21);
  c.config = cfg;
  return c;
}

std::vector<SweepRow> sweep(const ScenarioConfig& base, const SweepGrid& grid, int jobs) {
  std::vector<SweepRow> rows;
  for (const auto& [na, nb] : grid.fleets)
    for (auto l : grid.precision_units)
      for (auto s : grid.seeds) rows.push_back({na, nb, l, s, std::nullopt, "", ""});

  auto run_cell = [&base](SweepRow& row) {
    auto cfg = base;
    cfg.n_a = row.n_a;
    cfg.n_b = row.n_b;
    cfg.precision_unit = row.precision_unit;
    cfg.seed = row.seed;
    cfg.seed_a.reset();
    cfg.seed_b.reset();
    try {
      row.result = compare_strategies(cfg);
      row.status = "ok";
    } catch (const std::exception& e) {
      row.status = "error";
      row.message = e.what();
    }
  };

  const auto workers = static_cast<std::size_t>(std::clamp<std::int64_t>(jobs, 1, static_cast<std::int64_t>(std::max<std::size_t>(rows.size(), 1))));
  if (workers <= 1) {
    for (auto& r : rows) run_cell(r);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (auto i = next++; i < rows.size(); i = next++) run_cell(rows[i]);
    });
  }
  pool.clear();
  return rows;
}

}  // namespace fuzzysim
