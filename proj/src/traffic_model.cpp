#include "fuzzysim/traffic_model.hpp"

#include <algorithm>
#include <utility>

namespace fuzzysim {

namespace {

bool all_nonnegative(const Ofn& a) { return a.min_component() >= 0; }

bool all_leq(const Ofn& a, const Ofn& b) {
  for (std::size_t i = 0; i < 4; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool all_less_than(const Ofn& a, std::int64_t c) { return a.max_component() < c; }

void record(LaneState& state, const Vehicle& v) {
  if (v.phantom) return;
  auto& h = state.history.vehicles[v.history_slot];
  h.velocity.push_back(v.velocity);
  h.gap.push_back(v.gap);
  if (state.record_trace) state.trace.push_back({state.time, v.id, v.position, v.velocity, v.acceleration, v.gap});
}

void record_all(LaneState& state) {
  for (const auto& v : state.vehicles) record(state, v);
  state.history.periods = state.time + 1;
}

}  // namespace

History merge(History a, const History& b) {
  a.vehicles.insert(a.vehicles.end(), b.vehicles.begin(), b.vehicles.end());
  a.periods = std::max(a.periods, b.periods);
  return a;
}

void AccelerationRule::validate() const {
  if (!all_nonnegative(high) || !all_nonnegative(low)) {
    throw ModelError("acceleration values must be componentwise non-negative, got high=" + high.to_string() +
                     " low=" + low.to_string());
  }
}

Vehicle Vehicle::make_phantom(std::string id, std::int64_t cell, std::string lane) {
  Vehicle v;
  v.id = std::move(id);
  v.position = Ofn::crisp(cell);
  v.phantom = true;
  v.origin_lane = std::move(lane);
  return v;
}

Ofn gap(const Vehicle& lead, const Vehicle& follower) { return lead.position - follower.position - Ofn::one(); }

Ofn acceleration(const Ofn& v_prev, const Ofn& v_max, const AccelerationRule& rule) {
  if (v_prev == v_max || v_prev == v_max - Ofn{1, 0, 0, 0}) return rule.high;
  return rule.low;
}

Ofn step_velocity(const Ofn& v_prev, const Ofn& g, const Ofn& v_max, const AccelerationRule& rule) {
  return min_ofn(v_prev + acceleration(v_prev, v_max, rule), g, v_max);
}

bool vacated(const Vehicle& vehicle, std::int64_t boundary_cell) {
  return vehicle.position.min_component() > boundary_cell;
}

LaneState make_lane(std::string name, std::int64_t cell_count, std::vector<Vehicle> vehicles,
                    std::optional<std::int64_t> signal_cell, bool record_trace) {
  if (cell_count <= 0) throw ModelError("lane '" + name + "' needs a positive cell count");
  if (signal_cell && (*signal_cell < 0 || *signal_cell >= cell_count)) {
    throw ModelError("signal cell " + std::to_string(*signal_cell) + " outside lane '" + name + "'");
  }
  LaneState s;
  s.name = std::move(name);
  s.cell_count = cell_count;
  s.signal_cell = signal_cell;
  s.record_trace = record_trace;
  s.vehicles = std::move(vehicles);
  for (std::size_t n = 0; n < s.vehicles.size(); ++n) {
    auto& v = s.vehicles[n];
    if (v.phantom) {
      if (s.signal_phantom_id) throw ModelError("lane '" + s.name + "' has more than one phantom");
      s.signal_phantom_id = v.id;
      continue;
    }
    if (v.origin_lane.empty()) v.origin_lane = s.name;
    v.gap = n == 0 ? v.v_max : gap(s.vehicles[n - 1], v);
    v.history_slot = s.history.vehicles.size();
    s.history.vehicles.push_back({v.id, 0, {}, {}});
  }
  check_invariants(s);
  record_all(s);
  return s;
}

void check_invariants(const LaneState& state) {
  const auto& vs = state.vehicles;
  for (std::size_t n = 0; n < vs.size(); ++n) {
    const auto& v = vs[n];
    const std::string who = "vehicle '" + v.id + "' on lane '" + state.name + "'";
    if (v.phantom) {
      if (v.velocity != Ofn::zero() || v.v_max != Ofn::zero()) throw ModelError(who + ": phantom must be immobile");
      continue;
    }
    if (!all_nonnegative(v.v_max)) throw ModelError(who + ": v_max " + v.v_max.to_string() + " has a negative component");
    if (!all_nonnegative(v.velocity)) {
      throw ModelError(who + ": velocity " + v.velocity.to_string() + " has a negative component");
    }
    if (v.position.min_component() < 0) throw ModelError(who + ": position " + v.position.to_string() + " before cell 0");
    if (n == 0) continue;
    const auto g = gap(vs[n - 1], v);
    if (!all_nonnegative(g)) {
      throw ModelError(who + ": gap " + g.to_string() + " to '" + vs[n - 1].id + "' has a negative component");
    }
    if (!all_leq(v.velocity, g)) {
      throw ModelError(who + ": velocity " + v.velocity.to_string() + " exceeds gap " + g.to_string());
    }
  }
}

void advance(LaneState& state, const AccelerationRule& rule) {
  check_invariants(state);
  ++state.time;

  for (auto& v : state.vehicles)
    if (!v.phantom) v.position += v.velocity;

  const auto last_cell = state.cell_count - 1;
  const auto before = state.vehicles.size();
  std::erase_if(state.vehicles, [&](const Vehicle& v) { return !v.phantom && vacated(v, last_cell); });
  state.exited += static_cast<std::int64_t>(before - state.vehicles.size());

  // Positions are final for this step; velocities now see only the new positions.
  for (std::size_t n = 0; n < state.vehicles.size(); ++n) {
    auto& v = state.vehicles[n];
    if (v.phantom) continue;
    v.gap = n == 0 ? v.v_max : gap(state.vehicles[n - 1], v);
    v.acceleration = acceleration(v.velocity, v.v_max, rule);
    v.velocity = min_ofn(v.velocity + v.acceleration, v.gap, v.v_max);
  }
  record_all(state);
}

LaneState step(LaneState state, const AccelerationRule& rule) {
  advance(state, rule);
  return state;
}

void set_signal(LaneState& state, SignalColor color) {
  if (!state.signal_cell) throw ModelError("lane '" + state.name + "' has no signal");
  if (color == SignalColor::Green) {
    if (!state.signal_phantom_id) return;
    std::erase_if(state.vehicles, [](const Vehicle& v) { return v.phantom; });
    state.signal_phantom_id.reset();
    return;
  }
  if (state.signal_phantom_id) return;
  const auto c = *state.signal_cell;
  auto blocked = std::find_if(state.vehicles.begin(), state.vehicles.end(),
                              [c](const Vehicle& v) { return all_less_than(v.position + v.velocity, c); });
  auto id = state.name + ":signal";
  state.signal_phantom_id = id;
  state.vehicles.insert(blocked, Vehicle::make_phantom(std::move(id), c, state.name));
}

bool has_phantom(const LaneState& state) { return state.signal_phantom_id.has_value(); }

std::size_t active_vehicles(const LaneState& state) {
  return static_cast<std::size_t>(std::count_if(state.vehicles.begin(), state.vehicles.end(),
                                                [](const Vehicle& v) { return !v.phantom; }));
}

}  // namespace fuzzysim
