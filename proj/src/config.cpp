#include "fuzzysim/config.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace fuzzysim {

namespace {

std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) v.remove_suffix(1);
  return v;
}

[[noreturn]] void fail_at(int line, const std::string& msg) {
  throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

template <typename Int>
Int parse_int(std::string_view text, int line, std::string_view key) {
  text = trim(text);
  Int v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail_at(line, "field '" + std::string(key) + "': expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = text.find(sep);
    out.push_back(trim(text.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

// Typed access to one section; every key must be consumed or it is reported.
class SectionReader {
 public:
  explicit SectionReader(const ConfigSection& s) : s_(s) {
    std::set<std::string> seen;
    for (const auto& e : s_.entries)
      if (!seen.insert(e.key).second) fail_at(e.line, "duplicate field '" + e.key + "' in [" + s_.name + "]");
  }

  const ConfigEntry* find(std::string_view key) {
    for (const auto& e : s_.entries) {
      if (e.key == key) {
        used_.insert(e.key);
        return &e;
      }
    }
    return nullptr;
  }

  const ConfigEntry& require(std::string_view key) {
    if (auto* e = find(key)) return *e;
    fail_at(s_.line, "[" + s_.name + "] is missing field '" + std::string(key) + "'");
  }

  template <typename Int>
  void read_int(std::string_view key, Int& out) {
    if (auto* e = find(key)) out = parse_int<Int>(e->value, e->line, key);
  }

  void read_ofn(std::string_view key, Ofn& out) {
    if (auto* e = find(key)) out = ofn_at(*e);
  }

  static Ofn ofn_at(const ConfigEntry& e) {
    try {
      return Ofn::parse(e.value);
    } catch (const std::invalid_argument& ex) {
      fail_at(e.line, "field '" + e.key + "': " + ex.what());
    }
  }

  void finish() const {
    for (const auto& e : s_.entries)
      if (!used_.count(e.key)) fail_at(e.line, "unknown field '" + e.key + "' in [" + s_.name + "]");
  }

 private:
  const ConfigSection& s_;
  std::set<std::string> used_;
};

AccelerationRule read_rule(const ConfigSection& s) {
  SectionReader r(s);
  AccelerationRule rule;
  r.read_ofn("high", rule.high);
  r.read_ofn("low", rule.low);
  r.finish();
  if (rule.high.min_component() < 0 || rule.low.min_component() < 0) {
    fail_at(s.line, "acceleration values must be componentwise non-negative");
  }
  return rule;
}

SignalColor parse_color(const ConfigEntry& e) {
  if (e.value == "red") return SignalColor::Red;
  if (e.value == "green") return SignalColor::Green;
  fail_at(e.line, "signal_color must be red or green, got '" + e.value + "'");
}

ScenarioConfig read_scenario(const ConfigSection& s) {
  SectionReader r(s);
  ScenarioConfig c;
  r.read_int("lane_a_cells", c.lane_a_cells);
  r.read_int("lane_b_cells", c.lane_b_cells);
  r.read_int("workzone_cells", c.workzone_cells);
  r.read_int("n_a", c.n_a);
  r.read_int("n_b", c.n_b);
  r.read_int("precision_unit", c.precision_unit);
  r.read_ofn("v_max", c.v_max);
  r.read_int("seed", c.seed);
  r.read_int("max_steps", c.max_steps);
  r.read_int("alpha_levels", c.alpha_levels);
  if (auto* e = r.find("seed_a")) c.seed_a = parse_int<std::uint64_t>(e->value, e->line, "seed_a");
  if (auto* e = r.find("seed_b")) c.seed_b = parse_int<std::uint64_t>(e->value, e->line, "seed_b");
  if (auto* e = r.find("strategy")) {
    try {
      c.strategy = parse_strategy(e->value);
    } catch (const ConfigError& ex) {
      fail_at(e->line, ex.what());
    }
  }
  if (auto* e = r.find("initial_velocity")) {
    try {
      c.initial_velocity = parse_initial_velocity(e->value);
    } catch (const std::invalid_argument& ex) {
      fail_at(e->line, ex.what());
    }
  }
  r.finish();
  try {
    c.validate();
  } catch (const ConfigError& ex) {
    fail_at(s.line, ex.what());
  }
  return c;
}

Vehicle read_vehicle(const ConfigSection& s, std::size_t index) {
  SectionReader r(s);
  Vehicle v;
  v.id = std::to_string(index + 1);
  if (auto* e = r.find("id")) v.id = e->value;
  v.position = SectionReader::ofn_at(r.require("position"));
  r.read_ofn("velocity", v.velocity);
  v.v_max = SectionReader::ofn_at(r.require("v_max"));
  r.read_ofn("acceleration", v.acceleration);
  r.finish();
  return v;
}

std::vector<std::uint64_t> parse_seeds(const ConfigEntry& e) {
  std::vector<std::uint64_t> out;
  for (auto item : split(e.value, ',')) {
    auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int<std::uint64_t>(item, e.line, "seeds"));
      continue;
    }
    const auto lo = parse_int<std::uint64_t>(item.substr(0, dots), e.line, "seeds");
    const auto hi = parse_int<std::uint64_t>(item.substr(dots + 2), e.line, "seeds");
    if (hi < lo) fail_at(e.line, "seed range '" + std::string(item) + "' is empty");
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
  }
  return out;
}

SweepGrid read_grid(const ConfigSection& s) {
  SectionReader r(s);
  SweepGrid g;
  const auto& fleets = r.require("fleets");
  for (auto item : split(fleets.value, ',')) {
    auto colon = item.find(':');
    if (colon == std::string_view::npos) fail_at(fleets.line, "fleet '" + std::string(item) + "' must be n_a:n_b");
    g.fleets.emplace_back(parse_int<std::int64_t>(item.substr(0, colon), fleets.line, "fleets"),
                          parse_int<std::int64_t>(item.substr(colon + 1), fleets.line, "fleets"));
  }
  const auto& units = r.require("precision_units");
  for (auto item : split(units.value, ',')) g.precision_units.push_back(parse_int<std::int64_t>(item, units.line, "precision_units"));
  g.seeds = parse_seeds(r.require("seeds"));
  r.finish();
  if (g.fleets.empty() || g.precision_units.empty() || g.seeds.empty()) fail_at(s.line, "sweep grid must be non-empty");
  return g;
}

std::string join_ofn(const Ofn& a) {
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," + std::to_string(a[3]);
}

}  // namespace

std::vector<ConfigSection> parse_config_text(std::string_view text) {
  std::vector<ConfigSection> sections;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) fail_at(line_no, "malformed section header '" + std::string(line) + "'");
      sections.push_back({std::string(trim(line.substr(1, line.size() - 2))), line_no, {}});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail_at(line_no, "expected 'key = value', got '" + std::string(line) + "'");
    if (sections.empty()) fail_at(line_no, "field outside of any [section]");
    auto key = trim(line.substr(0, eq));
    if (key.empty()) fail_at(line_no, "empty field name");
    sections.back().entries.push_back({std::string(key), std::string(trim(line.substr(eq + 1))), line_no});
  }
  return sections;
}

RunConfig parse_run_config(std::string_view text) {
  const auto sections = parse_config_text(text);
  std::optional<ScenarioConfig> scenario;
  std::optional<LaneRunConfig> lane;
  std::optional<AccelerationRule> rule;
  std::optional<SweepGrid> grid;
  std::vector<Vehicle> vehicles;

  for (const auto& s : sections) {
    auto once = [&](bool already) {
      if (already) fail_at(s.line, "section [" + s.name + "] given twice");
    };
    if (s.name == "scenario") {
      once(scenario.has_value());
      scenario = read_scenario(s);
    } else if (s.name == "lane") {
      once(lane.has_value());
      SectionReader r(s);
      LaneRunConfig l;
      if (auto* e = r.find("name")) l.name = e->value;
      l.cells = parse_int<std::int64_t>(r.require("cells").value, r.require("cells").line, "cells");
      if (auto* e = r.find("signal_cell")) l.signal_cell = parse_int<std::int64_t>(e->value, e->line, "signal_cell");
      if (auto* e = r.find("signal_color")) l.signal_color = parse_color(*e);
      r.read_int("steps", l.steps);
      r.finish();
      if (l.cells < 1) fail_at(s.line, "lane needs a positive cell count");
      if (l.steps < 0) fail_at(s.line, "steps must be >= 0");
      if (l.signal_color && !l.signal_cell) fail_at(s.line, "signal_color needs signal_cell");
      lane = std::move(l);
    } else if (s.name == "rule") {
      once(rule.has_value());
      rule = read_rule(s);
    } else if (s.name == "vehicle") {
      vehicles.push_back(read_vehicle(s, vehicles.size()));
    } else if (s.name == "grid") {
      once(grid.has_value());
      grid = read_grid(s);
    } else {
      fail_at(s.line, "unknown section [" + s.name + "]");
    }
  }

  if (scenario && lane) throw ConfigError("line 1: a config holds either [scenario] or [lane], not both");
  RunConfig out;
  out.grid = grid;
  if (scenario) {
    if (!vehicles.empty()) throw ConfigError("line 1: [vehicle] sections only belong with [lane]");
    if (rule) scenario->rule = *rule;
    out.model = *scenario;
    return out;
  }
  if (!lane) throw ConfigError("line 1: config needs a [scenario] or [lane] section");
  if (rule) lane->rule = *rule;
  lane->vehicles = std::move(vehicles);
  out.model = std::move(*lane);
  return out;
}

SweepGrid parse_grid(std::string_view text) {
  for (const auto& s : parse_config_text(text)) {
    if (s.name == "grid") return read_grid(s);
  }
  throw ConfigError("line 1: grid spec needs a [grid] section");
}

std::string to_config_text(const ScenarioConfig& c) {
  std::ostringstream os;
  os << "[scenario]\n"
     << "lane_a_cells = " << c.lane_a_cells << "\n"
     << "lane_b_cells = " << c.lane_b_cells << "\n"
     << "workzone_cells = " << c.workzone_cells << "\n"
     << "n_a = " << c.n_a << "\n"
     << "n_b = " << c.n_b << "\n"
     << "precision_unit = " << c.precision_unit << "\n"
     << "v_max = " << join_ofn(c.v_max) << "\n"
     << "seed = " << c.seed << "\n";
  if (c.seed_a) os << "seed_a = " << *c.seed_a << "\n";
  if (c.seed_b) os << "seed_b = " << *c.seed_b << "\n";
  os << "max_steps = " << c.max_steps << "\n"
     << "strategy = " << to_string(c.strategy) << "\n"
     << "initial_velocity = " << to_string(c.initial_velocity) << "\n"
     << "alpha_levels = " << c.alpha_levels << "\n"
     << "\n[rule]\n"
     << "high = " << join_ofn(c.rule.high) << "\n"
     << "low = " << join_ofn(c.rule.low) << "\n";
  return os.str();
}

std::string to_config_text(const LaneRunConfig& c) {
  std::ostringstream os;
  os << "[lane]\n"
     << "name = " << c.name << "\n"
     << "cells = " << c.cells << "\n";
  if (c.signal_cell) os << "signal_cell = " << *c.signal_cell << "\n";
  if (c.signal_color) os << "signal_color = " << (*c.signal_color == SignalColor::Red ? "red" : "green") << "\n";
  os << "steps = " << c.steps << "\n"
     << "\n[rule]\n"
     << "high = " << join_ofn(c.rule.high) << "\n"
     << "low = " << join_ofn(c.rule.low) << "\n";
  for (const auto& v : c.vehicles) {
    os << "\n[vehicle]\n"
       << "id = " << v.id << "\n"
       << "position = " << join_ofn(v.position) << "\n"
       << "velocity = " << join_ofn(v.velocity) << "\n"
       << "v_max = " << join_ofn(v.v_max) << "\n"
       << "acceleration = " << join_ofn(v.acceleration) << "\n";
  }
  return os.str();
}

std::string to_config_text(const SweepGrid& g) {
  std::ostringstream os;
  os << "[grid]\nfleets = ";
  for (std::size_t i = 0; i < g.fleets.size(); ++i) os << (i ? ", " : "") << g.fleets[i].first << ":" << g.fleets[i].second;
  os << "\nprecision_units = ";
  for (std::size_t i = 0; i < g.precision_units.size(); ++i) os << (i ? ", " : "") << g.precision_units[i];
  os << "\nseeds = ";
  for (std::size_t i = 0; i < g.seeds.size(); ++i) os << (i ? ", " : "") << g.seeds[i];
  os << "\n";
  return os.str();
}

std::string to_config_text(const RunConfig& c) {
  std::string out = std::visit([](const auto& m) { return to_config_text(m); }, c.model);
  if (c.grid) out += "\n" + to_config_text(*c.grid);
  return out;
}

}  // namespace fuzzysim
