#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuzzysim/measures.hpp"
#include "fuzzysim/traffic_model.hpp"
#include "lane_fixtures.hpp"
#include "oracles.hpp"

using fuzzysim::History;
using fuzzysim::Ofn;
using fuzzysim::VehicleHistory;

namespace {

History two_vehicle_history() {
  auto s = fixtures::two_vehicle_lane(false);
  for (int i = 0; i < 3; ++i) fuzzysim::advance(s, fuzzysim::AccelerationRule{});
  return s.history;
}

bool nondecreasing(const Ofn& o) { return o[0] <= o[1] && o[1] <= o[2] && o[2] <= o[3]; }

}  // namespace

TEST_CASE("two-vehicle measures") {
  const auto h = two_vehicle_history();
  CHECK(h.periods == 4);
  CHECK(fuzzysim::delay_sum(h) == Ofn{0, 0, 0, 5});
  CHECK(fuzzysim::average_delay(h) == Ofn{0, 0, 0, 3});
  CHECK(fuzzysim::stops_sum(h) == Ofn{0, 0, 0, 3});
  CHECK(fuzzysim::average_stops(h) == Ofn{0, 0, 0, 2});
  CHECK(fuzzysim::queue_sum(h) == Ofn{0, 0, 0, 3});
  CHECK(fuzzysim::average_queue(h) == Ofn{0, 0, 0, 1});
  const auto r = fuzzysim::evaluate(h);
  CHECK(r.delay == Ofn{0, 0, 0, 3});
  CHECK(r.vehicles == 2);
  CHECK_FALSE(r.empty_fleet);
}

TEST_CASE("one possible stop") {
  History h;
  h.periods = 2;
  h.vehicles.push_back({"a", 0, {{0, 2, 2, 3}, Ofn::zero()}, {Ofn::one(), Ofn::zero()}});
  CHECK(fuzzysim::stops_sum(h) == Ofn{0, 1, 1, 1});
  CHECK(fuzzysim::queue_sum(h) == Ofn::one());
  CHECK(fuzzysim::average_queue(h) == Ofn::one());
}

TEST_CASE("crisp vehicle held three steps") {
  History h;
  h.periods = 5;
  h.vehicles.push_back({"a", 0,
                        {Ofn::crisp(2), Ofn::zero(), Ofn::zero(), Ofn::zero(), Ofn::crisp(1)},
                        {Ofn::crisp(3), Ofn::zero(), Ofn::zero(), Ofn::zero(), Ofn::crisp(2)}});
  const auto r = fuzzysim::evaluate(h);
  CHECK(r.delay == Ofn::crisp(3));
  CHECK(r.stops == Ofn::crisp(1));
  CHECK(r.raw_queue == Ofn::crisp(3));
  CHECK(r.queue == Ofn::crisp(1));
}

TEST_CASE("empty fleet") {
  History h;
  h.periods = 7;
  const auto r = fuzzysim::evaluate(h);
  CHECK(r.empty_fleet);
  CHECK(r.delay == Ofn::zero());
  CHECK(r.stops == Ofn::zero());
  CHECK(r.queue == Ofn::zero());
  CHECK(fuzzysim::evaluate(History{}).queue == Ofn::zero());
}

TEST_CASE("property: crisp histories match scalar counts") {
  std::mt19937_64 gen(41);
  std::uniform_int_distribution<std::int64_t> acc(0, 2);
  std::uniform_int_distribution<int> coin(0, 7);
  int cases = 0;
  while (cases < 10000) {
    auto s = fixtures::random_lane(gen, true, 50, 30);
    const auto high = acc(gen);
    const auto low = acc(gen);
    oracle::ScalarLane ref;
    ref.cells = 50;
    ref.high = high;
    ref.low = low;
    for (const auto& v : s.vehicles) ref.cars.push_back({v.position[0], v.velocity[0], v.v_max[0], 0, 0, false, {}, {}});
    ref.init();
    for (int t = 0; t < 20; ++t) {
      const int c = coin(gen);
      if (c == 0) {
        fuzzysim::set_signal(s, fuzzysim::SignalColor::Red);
        ref.red(30);
      } else if (c == 1) {
        fuzzysim::set_signal(s, fuzzysim::SignalColor::Green);
        ref.green();
      }
      fuzzysim::advance(s, {Ofn::crisp(high), Ofn::crisp(low)});
      ref.step();
    }
    ++cases;
    const auto m = oracle::count_measures(ref);
    const auto r = fuzzysim::evaluate(s.history);
    REQUIRE(r.raw_delay == Ofn::crisp(m.stopped_steps));
    REQUIRE(r.raw_stops == Ofn::crisp(m.stops));
    REQUIRE(r.raw_queue == Ofn::crisp(m.queued));
    REQUIRE(r.periods == 21);
    if (!ref.cars.empty()) {
      const auto n = static_cast<std::int64_t>(ref.cars.size());
      REQUIRE(r.delay == Ofn::crisp(oracle::nearest(m.stopped_steps, n)));
    }
  }
}

TEST_CASE("property: additivity, bounds, monotone outputs") {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<std::int64_t> acc(0, 2);
  for (int i = 0; i < 10000; ++i) {
    auto a = fixtures::random_lane(gen, false, 40, 25);
    auto b = fixtures::random_lane(gen, false, 40, 25);
    const fuzzysim::AccelerationRule rule{{acc(gen), acc(gen), acc(gen), acc(gen)}, {acc(gen), acc(gen), acc(gen), acc(gen)}};
    if (i % 2 == 0) fuzzysim::set_signal(a, fuzzysim::SignalColor::Red);
    for (int t = 0; t < 8; ++t) {
      fuzzysim::advance(a, rule);
      fuzzysim::advance(b, rule);
    }
    const auto merged = fuzzysim::merge(a.history, b.history);
    REQUIRE(fuzzysim::delay_sum(merged) == fuzzysim::delay_sum(a.history) + fuzzysim::delay_sum(b.history));
    REQUIRE(fuzzysim::stops_sum(merged) == fuzzysim::stops_sum(a.history) + fuzzysim::stops_sum(b.history));
    REQUIRE(fuzzysim::queue_sum(merged) == fuzzysim::queue_sum(a.history) + fuzzysim::queue_sum(b.history));

    const auto r = fuzzysim::evaluate(merged);
    std::int64_t steps = 0;
    for (const auto& v : merged.vehicles) steps += static_cast<std::int64_t>(v.velocity.size());
    for (const Ofn* o : {&r.raw_delay, &r.raw_stops, &r.raw_queue, &r.delay, &r.stops, &r.queue}) {
      REQUIRE(nondecreasing(*o));
      REQUIRE(o->min_component() >= 0);
    }
    REQUIRE(r.raw_delay.max_component() <= steps);
    REQUIRE(r.raw_queue.max_component() <= steps);
    REQUIRE(r.raw_stops.max_component() <= steps);
    REQUIRE(r.delay.max_component() <= r.periods);
  }
}
