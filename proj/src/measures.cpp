#include "fuzzysim/measures.hpp"

namespace fuzzysim {

namespace {

constexpr auto kZero = IntPredicate::equals_zero();
constexpr auto kMoving = IntPredicate::greater_than_zero();

std::int64_t fleet_size(const History& h) { return static_cast<std::int64_t>(h.vehicles.size()); }

}  // namespace

Ofn delay_sum(const History& h) {
  Ofn sum;
  for (const auto& v : h.vehicles)
    for (const auto& vel : v.velocity) sum += s_condition(vel, kZero);
  return sum;
}

Ofn stops_sum(const History& h) {
  Ofn sum;
  for (const auto& v : h.vehicles)
    for (std::size_t t = 1; t < v.velocity.size(); ++t)
      sum += min_ofn(s_condition(v.velocity[t - 1], kMoving), s_condition(v.velocity[t], kZero));
  return sum;
}

Ofn queue_sum(const History& h) {
  Ofn sum;
  for (const auto& v : h.vehicles)
    for (const auto& g : v.gap) sum += s_condition(g, kZero);
  return sum;
}

Ofn average_delay(const History& h) {
  const auto n = fleet_size(h);
  return n == 0 ? Ofn::zero() : div_int(delay_sum(h), n);
}

Ofn average_stops(const History& h) {
  const auto n = fleet_size(h);
  return n == 0 ? Ofn::zero() : div_int(stops_sum(h), n);
}

Ofn average_queue(const History& h) { return h.periods < 1 ? Ofn::zero() : div_int(queue_sum(h), h.periods); }

PerformanceReport evaluate(const History& h) {
  PerformanceReport r;
  r.vehicles = fleet_size(h);
  r.periods = h.periods;
  r.empty_fleet = r.vehicles == 0;
  r.raw_delay = delay_sum(h);
  r.raw_stops = stops_sum(h);
  r.raw_queue = queue_sum(h);
  if (r.vehicles > 0) {
    r.delay = div_int(r.raw_delay, r.vehicles);
    r.stops = div_int(r.raw_stops, r.vehicles);
  }
  if (r.periods > 0) r.queue = div_int(r.raw_queue, r.periods);
  return r;
}

}  // namespace fuzzysim
