#pragma once

#include <cstdint>

#include "fuzzysim/history.hpp"
#include "fuzzysim/ofn.hpp"

namespace fuzzysim {

/// Fuzzy delay, stops and queue, with the undivided sums they came from.
///
/// Delay counts stopped time steps (velocity condition "= 0"), not the
/// difference to a free-flow travel time.
struct PerformanceReport {
  Ofn delay;  // time steps per vehicle
  Ofn stops;  // stops per vehicle
  Ofn queue;  // cells
  Ofn raw_delay;
  Ofn raw_stops;
  Ofn raw_queue;
  std::int64_t vehicles = 0;  // N
  std::int64_t periods = 0;   // T
  /// Set when N = 0; every measure is then (0,0,0,0).
  bool empty_fleet = false;

  friend bool operator==(const PerformanceReport&, const PerformanceReport&) = default;
};

/// Sum over vehicles and steps of S_{=0}(V).
Ofn delay_sum(const History& h);
/// Sum over vehicles and steps t >= entry + 1 of min(S_{>0}(V_{t-1}), S_{=0}(V_t)).
Ofn stops_sum(const History& h);
/// Sum over vehicles and steps of S_{=0}(G).
Ofn queue_sum(const History& h);

Ofn average_delay(const History& h);
Ofn average_stops(const History& h);
Ofn average_queue(const History& h);

PerformanceReport evaluate(const History& h);

}  // namespace fuzzysim
