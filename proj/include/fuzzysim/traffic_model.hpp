#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzysim/history.hpp"
#include "fuzzysim/ofn.hpp"

namespace fuzzysim {

/// Raised when a lane state breaks the gap or phantom invariants.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-valued slow-to-stop acceleration: `high` when the previous velocity
/// equals v_max or v_max - (1,0,0,0), `low` otherwise.
struct AccelerationRule {
  Ofn high{1, 1, 1, 1};
  Ofn low{0, 1, 1, 1};

  /// Throws ModelError unless every component of both values is >= 0.
  void validate() const;

  friend bool operator==(const AccelerationRule&, const AccelerationRule&) = default;
};

struct Vehicle {
  std::string id;
  Ofn position;
  /// Velocity applied by the next position update.
  Ofn velocity;
  Ofn v_max;
  /// Acceleration and gap used to produce `velocity` (trace columns A, G).
  Ofn acceleration;
  Ofn gap;
  bool phantom = false;
  std::string origin_lane;
  /// Index into LaneState::history.vehicles; set by make_lane.
  std::size_t history_slot = 0;

  static Vehicle make_phantom(std::string id, std::int64_t cell, std::string lane);
};

enum class SignalColor { Red, Green };

/// One row of the per-step trace export.
struct TraceRow {
  std::int64_t t = 0;
  std::string vehicle;
  Ofn position, velocity, acceleration, gap;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// A single-lane cell lattice. Vehicles are ordered downstream-first: the
/// vehicle at index n - 1 leads the vehicle at index n. Cell indices grow in
/// the direction of travel.
struct LaneState {
  std::string name;
  std::int64_t cell_count = 0;
  std::vector<Vehicle> vehicles;
  std::optional<std::int64_t> signal_cell;
  std::optional<std::string> signal_phantom_id;
  std::int64_t time = 0;
  History history;
  bool record_trace = false;
  std::vector<TraceRow> trace;
  std::int64_t exited = 0;
};

/// G = lead.X - follower.X - (1,1,1,1).
Ofn gap(const Vehicle& lead, const Vehicle& follower);

Ofn acceleration(const Ofn& v_prev, const Ofn& v_max, const AccelerationRule& rule);

/// min(v_prev + A(v_prev), g, v_max). A vehicle without a leader passes g = v_max.
Ofn step_velocity(const Ofn& v_prev, const Ofn& g, const Ofn& v_max, const AccelerationRule& rule);

/// True iff every position component is strictly past `boundary_cell`.
bool vacated(const Vehicle& vehicle, std::int64_t boundary_cell);

/// Builds a lane at t = 0 from vehicles listed downstream-first. Positions
/// and velocities are taken as given; the t = 0 gap column is computed from
/// the positions. Validates the state and records the t = 0 history row.
LaneState make_lane(std::string name, std::int64_t cell_count, std::vector<Vehicle> vehicles,
                    std::optional<std::int64_t> signal_cell = std::nullopt, bool record_trace = false);

/// Throws ModelError if any invariant is broken: non-phantom followers need
/// gap >= 0 and velocity <= gap componentwise, velocities >= 0, v_max >= 0,
/// phantoms have zero velocity and v_max, and the downstream-first order
/// must hold.
void check_invariants(const LaneState& state);

/// One synchronous time step, in place: every vehicle moves by its current
/// velocity, vehicles that left the lattice are dropped, then every new
/// velocity is computed from the updated positions. Phantoms never move.
void advance(LaneState& state, const AccelerationRule& rule);

/// Value-returning form of advance().
LaneState step(LaneState state, const AccelerationRule& rule);

/// Red inserts a phantom at the signal cell ahead of the first vehicle whose
/// next position (X + V) lies entirely upstream of it; vehicles already
/// reaching the stop line are committed and pass. Green removes the phantom.
/// Idempotent per color.
void set_signal(LaneState& state, SignalColor color);

bool has_phantom(const LaneState& state);

/// Number of non-phantom vehicles still on the lane.
std::size_t active_vehicles(const LaneState& state);

}  // namespace fuzzysim
