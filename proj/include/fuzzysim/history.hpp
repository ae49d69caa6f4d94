#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fuzzysim/ofn.hpp"

namespace fuzzysim {

/// Velocity and gap of one vehicle at each time step it spent on a lane,
/// starting at `entry_t` and contiguous from there.
struct VehicleHistory {
  std::string id;
  std::int64_t entry_t = 0;
  std::vector<Ofn> velocity;
  std::vector<Ofn> gap;

  friend bool operator==(const VehicleHistory&, const VehicleHistory&) = default;
};

/// Phantom vehicles never appear here.
struct History {
  std::vector<VehicleHistory> vehicles;
  /// Number of recorded time indices (t = 0 .. periods - 1).
  std::int64_t periods = 0;

  friend bool operator==(const History&, const History&) = default;
};

/// Vehicle lists are concatenated; the period count is the longer of the two.
History merge(History a, const History& b);

}  // namespace fuzzysim
