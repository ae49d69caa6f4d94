#include "fuzzysim/report_io.hpp"

#include <charconv>
#include <ostream>

namespace fuzzysim {

namespace {

std::string quoted(const Ofn& a) { return "\"" + a.to_string() + "\""; }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_trace_csv(std::ostream& os, std::span<const TraceRow> rows) {
  os << kTraceSchema << "\n"
     << "t,vehicle,X,V,A,G\n";
  for (const auto& r : rows) {
    os << r.t << ',' << r.vehicle << ',' << quoted(r.position) << ',' << quoted(r.velocity) << ','
       << quoted(r.acceleration) << ',' << quoted(r.gap) << '\n';
  }
}

void write_report_csv(std::ostream& os, const PerformanceReport& r) {
  os << kReportSchema << "\n"
     << "measure,value,raw\n"
     << "delay," << quoted(r.delay) << ',' << quoted(r.raw_delay) << '\n'
     << "stops," << quoted(r.stops) << ',' << quoted(r.raw_stops) << '\n'
     << "queue," << quoted(r.queue) << ',' << quoted(r.raw_queue) << '\n'
     << "N," << r.vehicles << ",\n"
     << "T," << r.periods << ",\n";
}

nlohmann::ordered_json to_json(const PerformanceReport& r) {
  return {
      {"delay", r.delay.to_string()},         {"stops", r.stops.to_string()},
      {"queue", r.queue.to_string()},         {"raw_delay", r.raw_delay.to_string()},
      {"raw_stops", r.raw_stops.to_string()}, {"raw_queue", r.raw_queue.to_string()},
      {"N", r.vehicles},                      {"T", r.periods},
      {"empty_fleet", r.empty_fleet},
  };
}

nlohmann::ordered_json to_json(const ScenarioConfig& c) {
  nlohmann::ordered_json j = {
      {"lane_a_cells", c.lane_a_cells},
      {"lane_b_cells", c.lane_b_cells},
      {"workzone_cells", c.workzone_cells},
      {"n_a", c.n_a},
      {"n_b", c.n_b},
      {"precision_unit", c.precision_unit},
      {"v_max", c.v_max.to_string()},
      {"accel_high", c.rule.high.to_string()},
      {"accel_low", c.rule.low.to_string()},
      {"seed", c.seed},
      {"max_steps", c.resolved_max_steps()},
      {"initial_velocity", std::string(to_string(c.initial_velocity))},
      {"alpha_levels", c.alpha_levels},
  };
  if (c.seed_a) j["seed_a"] = *c.seed_a;
  if (c.seed_b) j["seed_b"] = *c.seed_b;
  return j;
}

nlohmann::ordered_json to_json(const StrategyComparison& c) {
  return {
      {"schema", kCompareSchema},
      {"d1", c.d1.to_string()},
      {"d2", c.d2.to_string()},
      {"p12", c.p_12},
      {"p21", c.p_21},
      {"unc", c.unc},
      {"strategy1", {{"name", "AFirst"}, {"report", to_json(c.report1)}}},
      {"strategy2", {{"name", "BFirst"}, {"report", to_json(c.report2)}}},
      {"config", to_json(c.config)},
  };
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << kSweepSchema << "\n"
     << "n_a,n_b,precision_unit,seed,d1_1,d1_2,d1_3,d1_4,d2_1,d2_2,d2_3,d2_4,p12,p21,unc,status\n";
  for (const auto& r : rows) {
    os << r.n_a << ',' << r.n_b << ',' << r.precision_unit << ',' << r.seed << ',';
    if (r.result) {
      const auto& c = *r.result;
      for (auto v : c.d1.components()) os << v << ',';
      for (auto v : c.d2.components()) os << v << ',';
      os << format_double(c.p_12) << ',' << format_double(c.p_21) << ',' << format_double(c.unc) << ',';
    } else {
      os << ",,,,,,,,,,,";
    }
    os << r.status << '\n';
  }
}

}  // namespace fuzzysim
