#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuzzysim/workzone.hpp"
#include "oracles.hpp"

using fuzzysim::Ofn;
using fuzzysim::ScenarioConfig;
using fuzzysim::Strategy;

namespace {

ScenarioConfig small(std::int64_t na, std::int64_t nb, std::uint64_t seed = 1) {
  ScenarioConfig c;
  c.lane_a_cells = 30;
  c.lane_b_cells = 30;
  c.workzone_cells = 6;
  c.n_a = na;
  c.n_b = nb;
  c.seed = seed;
  return c;
}

bool same_report(const fuzzysim::PerformanceReport& a, const fuzzysim::PerformanceReport& b) { return a == b; }

}  // namespace

TEST_CASE("config validation") {
  auto c = small(1, 1);
  CHECK_NOTHROW(c.validate());
  c.n_a = 31;
  CHECK_THROWS_AS(c.validate(), fuzzysim::ConfigError);
  c = small(1, 1);
  c.workzone_cells = 0;
  CHECK_THROWS_AS(c.validate(), fuzzysim::ConfigError);
  c = small(1, 1);
  c.precision_unit = 0;
  CHECK_THROWS_AS(c.validate(), fuzzysim::ConfigError);
  c = small(1, 1);
  c.v_max = Ofn{-1, 0, 0, 0};
  CHECK_THROWS_AS(c.validate(), fuzzysim::ConfigError);
  CHECK(fuzzysim::parse_strategy("BFirst") == Strategy::BFirst);
  CHECK(fuzzysim::parse_strategy(fuzzysim::to_string(Strategy::AFirst)) == Strategy::AFirst);
  CHECK_THROWS_AS(fuzzysim::parse_strategy("C"), fuzzysim::ConfigError);
  CHECK(small(2, 3).resolved_max_steps() == 10 * 36 * 5);
}

TEST_CASE("draw_cells") {
  const auto a = fuzzysim::draw_cells(42, 100, 10);
  CHECK(a == fuzzysim::draw_cells(42, 100, 10));
  CHECK(a.size() == 10);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(a != fuzzysim::draw_cells(43, 100, 10));
  CHECK(fuzzysim::draw_cells(1, 5, 5) == std::vector<std::int64_t>{0, 1, 2, 3, 4});
  CHECK(fuzzysim::draw_cells(1, 5, 0).empty());
  CHECK_THROWS_AS(fuzzysim::draw_cells(1, 5, 6), fuzzysim::ConfigError);
}

TEST_CASE("scenario construction") {
  SUBCASE("both approaches start behind a red signal") {
    const auto z = fuzzysim::build_scenario(small(4, 3));
    CHECK(fuzzysim::has_phantom(z.a));
    CHECK(fuzzysim::has_phantom(z.b));
    CHECK(fuzzysim::active_vehicles(z.a) == 4);
    CHECK(fuzzysim::active_vehicles(z.b) == 3);
    CHECK(z.a.cell_count == 36);
    CHECK(z.a.signal_cell == 30);
  }
  SUBCASE("full precision placement is crisp") {
    const auto z = fuzzysim::build_scenario(small(8, 8));
    for (const auto& v : z.a.vehicles) CHECK(v.position.is_crisp());
  }
  SUBCASE("coarse precision placement is fuzzy but inside the approach") {
    auto c = small(5, 0, 42);
    c.precision_unit = 4;
    const auto z = fuzzysim::build_scenario(c);
    bool fuzzy = false;
    for (const auto& v : z.a.vehicles) {
      if (v.phantom) continue;
      fuzzy = fuzzy || !v.position.is_crisp();
      CHECK(v.position.is_proper());
      CHECK(v.position.min_component() >= 0);
      CHECK(v.position.max_component() < 30);
    }
    CHECK(fuzzy);
    const auto again = fuzzysim::build_scenario(c);
    CHECK(again.a.vehicles.size() == z.a.vehicles.size());
    for (std::size_t i = 0; i < z.a.vehicles.size(); ++i) {
      CHECK(again.a.vehicles[i].position == z.a.vehicles[i].position);
      CHECK(again.a.vehicles[i].velocity == z.a.vehicles[i].velocity);
    }
  }
}

TEST_CASE("empty fleets") {
  const auto r = fuzzysim::run_strategy(small(0, 0));
  CHECK(r.steps == 0);
  CHECK(r.report.empty_fleet);
  CHECK(r.report.delay == Ofn::zero());
  const auto c = fuzzysim::compare_strategies(small(0, 0));
  CHECK(c.unc == 1.0);
}

TEST_CASE("crisp runs match the scalar automaton") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CAPTURE(seed);
    auto cfg = small(3, 2, seed);
    cfg.v_max = Ofn::crisp(2);
    cfg.rule = {Ofn::one(), Ofn::one()};
    cfg.initial_velocity = fuzzysim::InitialVelocity::AtMax;
    cfg.strategy = seed % 2 ? Strategy::AFirst : Strategy::BFirst;

    oracle::ScalarLane lanes[2];
    for (int l = 0; l < 2; ++l) {
      auto& ln = lanes[l];
      ln.cells = 36;
      ln.red(30);
      const auto cells = fuzzysim::draw_cells(cfg.lane_seed(l == 0 ? 'A' : 'B'), 30, l == 0 ? 3 : 2);
      for (auto it = cells.rbegin(); it != cells.rend(); ++it) ln.cars.push_back({*it, 0, 2, 0, 0, false, {}, {}});
      for (std::size_t i = 0; i < ln.cars.size(); ++i) ln.cars[i].v = std::min<std::int64_t>(2, ln.gap_of(i));
      ln.init();
    }
    auto& first = lanes[cfg.strategy == Strategy::AFirst ? 0 : 1];
    auto& second = lanes[cfg.strategy == Strategy::AFirst ? 1 : 0];
    first.green();
    bool switched = false;
    std::int64_t steps = 0;
    while (true) {
      if (!switched && first.empty()) {
        second.green();
        switched = true;
      }
      if (lanes[0].empty() && lanes[1].empty()) break;
      lanes[0].step();
      lanes[1].step();
      ++steps;
    }
    std::int64_t delay = 0, stops = 0;
    for (const auto& ln : lanes) {
      const auto m = oracle::count_measures(ln);
      delay += m.stopped_steps;
      stops += m.stops;
    }

    const auto r = fuzzysim::run_strategy(cfg);
    CHECK(r.steps == steps);
    CHECK(r.report.raw_delay == Ofn::crisp(delay));
    CHECK(r.report.raw_stops == Ofn::crisp(stops));
    CHECK(r.report.delay == Ofn::crisp(oracle::nearest(delay, 5)));
  }
}

TEST_CASE("swapping the lanes swaps the strategies") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto c1 = small(6, 3);
    c1.seed_a = seed;
    c1.seed_b = seed + 100;
    c1.strategy = Strategy::AFirst;
    auto c2 = small(3, 6);
    c2.seed_a = seed + 100;
    c2.seed_b = seed;
    c2.strategy = Strategy::BFirst;
    const auto r1 = fuzzysim::run_strategy(c1);
    const auto r2 = fuzzysim::run_strategy(c2);
    CHECK(same_report(r1.report, r2.report));
    CHECK(r1.steps == r2.steps);
  }
}

TEST_CASE("comparison confidence") {
  ScenarioConfig lopsided;
  lopsided.n_a = 40;
  lopsided.n_b = 5;
  lopsided.seed = 3;
  const auto c = fuzzysim::compare_strategies(lopsided);
  CHECK(c.unc < 0.5);

  ScenarioConfig close;
  close.n_a = 50;
  close.n_b = 45;
  close.seed = 7;
  const auto d = fuzzysim::compare_strategies(close);
  CHECK(d.unc >= 0.0);
  CHECK(d.unc <= 1.0);
  CHECK(d.report1.vehicles == 95);
}

TEST_CASE("step cap and safety check") {
  auto c = small(5, 5);
  c.max_steps = 3;
  try {
    fuzzysim::run_strategy(c);
    FAIL("expected the step cap to trigger");
  } catch (const fuzzysim::NonTerminationError& e) {
    CHECK(e.partial_history().periods == 4);
    CHECK(e.partial_history().vehicles.size() == 10);
  }

  // Under the default rule a velocity whose lowest component is 0 only
  // accelerates there at v_max - (1,0,0,0), which never occurs here.
  auto stall = small(1, 0);
  stall.v_max = Ofn{2, 2, 3, 3};
  CHECK_THROWS_AS(fuzzysim::run_strategy(stall), fuzzysim::NonTerminationError);

  // A vehicle that can never leave sits inside B's share of the zone.
  fuzzysim::Vehicle stuck;
  stuck.id = "B1";
  stuck.position = Ofn::crisp(32);
  auto b = fuzzysim::make_lane("B", 36, {stuck, fuzzysim::Vehicle::make_phantom("B:signal", 30, "B")}, 30);
  fuzzysim::Vehicle mover;
  mover.id = "A1";
  mover.position = Ofn::crisp(28);
  mover.velocity = Ofn::crisp(1);
  mover.v_max = Ofn::crisp(1);
  auto a = fuzzysim::make_lane("A", 36, {fuzzysim::Vehicle::make_phantom("A:signal", 30, "A"), mover}, 30);
  CHECK_THROWS_AS(fuzzysim::run_strategy({a, b, 6}, small(1, 1), Strategy::AFirst), fuzzysim::ModelError);
}

TEST_CASE("sweep") {
  const auto base = small(0, 0);
  fuzzysim::SweepGrid one{{{3, 2}}, {1}, {5}};
  const auto rows = fuzzysim::sweep(base, one);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status == "ok");
  auto direct = base;
  direct.n_a = 3;
  direct.n_b = 2;
  direct.seed = 5;
  CHECK(rows[0].result->d1 == fuzzysim::compare_strategies(direct).d1);

  fuzzysim::SweepGrid dup{{{4, 4}}, {1, 2}, {9, 9}};
  const auto d = fuzzysim::sweep(base, dup);
  CHECK(d[0].result->d1 == d[1].result->d1);
  CHECK(d[0].result->unc == d[1].result->unc);

  fuzzysim::SweepGrid grid{{{4, 4}, {31, 1}, {6, 2}}, {1, 3}, {1, 2, 3}};
  const auto serial = fuzzysim::sweep(base, grid, 1);
  const auto parallel = fuzzysim::sweep(base, grid, 4);
  REQUIRE(serial.size() == 18);
  REQUIRE(parallel.size() == 18);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CAPTURE(i);
    CHECK(serial[i].n_a == parallel[i].n_a);
    CHECK(serial[i].precision_unit == parallel[i].precision_unit);
    CHECK(serial[i].seed == parallel[i].seed);
    CHECK(serial[i].status == parallel[i].status);
    CHECK(serial[i].message == parallel[i].message);
    if (serial[i].result) {
      CHECK(serial[i].result->d1 == parallel[i].result->d1);
      CHECK(serial[i].result->d2 == parallel[i].result->d2);
      CHECK(serial[i].result->unc == parallel[i].result->unc);
    }
  }
  // the 31:1 fleet does not fit a 30-cell approach
  for (std::size_t i = 6; i < 12; ++i) {
    CHECK(serial[i].status == "error");
    CHECK_FALSE(serial[i].result.has_value());
  }
  CHECK(serial[12].status == "ok");
}

TEST_CASE("property: conservation and confidence recomputation") {
  std::mt19937_64 gen(61);
  std::uniform_int_distribution<std::int64_t> lane(3, 12);
  std::uniform_int_distribution<std::int64_t> wz(1, 4);
  std::uniform_int_distribution<std::int64_t> unit(1, 6);
  std::uniform_int_distribution<std::int64_t> vm(1, 3);
  for (int i = 0; i < 10000; ++i) {
    ScenarioConfig c;
    c.lane_a_cells = lane(gen);
    c.lane_b_cells = lane(gen);
    c.workzone_cells = wz(gen);
    c.n_a = std::uniform_int_distribution<std::int64_t>(0, c.lane_a_cells / 2)(gen);
    c.n_b = std::uniform_int_distribution<std::int64_t>(0, c.lane_b_cells / 2)(gen);
    c.precision_unit = unit(gen);
    // the lowest component must be 1 for the slow-start rule to reach v_max
    std::array<std::int64_t, 3> v{vm(gen), vm(gen), vm(gen)};
    std::sort(v.begin(), v.end());
    c.v_max = {1, v[0], v[1], v[2]};
    c.seed = gen();
    c.initial_velocity = static_cast<fuzzysim::InitialVelocity>(i % 3);

    const auto r = fuzzysim::run_strategy(c);
    REQUIRE(r.entered == c.n_a + c.n_b);
    REQUIRE(r.exited == r.entered);
    REQUIRE(static_cast<std::int64_t>(r.history.vehicles.size()) == r.entered);
    REQUIRE(r.report.periods == r.steps + 1);

    const auto cmp = fuzzysim::compare_strategies(c);
    const auto p = fuzzysim::prob_less(cmp.d1, cmp.d2, c.alpha_levels);
    REQUIRE(cmp.p_12 == p.p_less);
    REQUIRE(cmp.p_21 == p.p_greater);
    REQUIRE(cmp.unc == doctest::Approx(1.0 - std::max(p.p_less, p.p_greater) + std::min(p.p_less, p.p_greater)));
    REQUIRE(cmp.unc >= 0.0);
    REQUIRE(cmp.unc <= 1.0);
    REQUIRE(cmp.d1 == r.report.delay);
  }
}
