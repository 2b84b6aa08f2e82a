#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "gridsched/evaluation.hpp"
#include "gridsched/optimizer.hpp"
#include "gridsched/rng.hpp"
#include "gridsched/spec_io.hpp"

using namespace gridsched;

namespace {

const MicrogridSpec& bench_spec() {
  static const MicrogridSpec spec = load_case(GRIDSCHED_DATA_DIR "/case33.json").spec;
  return spec;
}

Scenario flat_scenario(int T, double load) {
  Scenario sc;
  sc.wind_power.assign(T, 0.0);
  sc.pv_power.assign(T, 0.0);
  sc.load.assign(T, load);
  sc.probability = 1.0;
  return sc;
}

}  // namespace

TEST_CASE("quadratic fuel curve matches hand-computed hourly costs") {
  const auto& gens = bench_spec().generators;
  REQUIRE(gens.size() == 3);
  const Generator& g1 = gens[0];
  const Generator& g2 = gens[1];
  const Generator& g3 = gens[2];

  CHECK(fuel_cost(g1, 300.0) == doctest::Approx(277.0).epsilon(1e-12));
  CHECK(fuel_cost(g3, 250.0) == doctest::Approx(270.0).epsilon(1e-12));
  CHECK(fuel_cost(g3, 300.0) == doctest::Approx(365.0).epsilon(1e-12));
  CHECK(fuel_cost(g2, 75.0) == doctest::Approx(141.25).epsilon(1e-12));
  CHECK(fuel_cost(g2, 100.0) == doctest::Approx(215.0).epsilon(1e-12));
  CHECK(fuel_cost(g2, 150.0) == doctest::Approx(407.5).epsilon(1e-12));

  // hourly totals at the reference dispatches
  CHECK(fuel_cost(g1, 300.0) + fuel_cost(g3, 250.0) == doctest::Approx(547.0).epsilon(1e-12));
  CHECK(fuel_cost(g1, 300.0) + fuel_cost(g3, 300.0) == doctest::Approx(642.0).epsilon(1e-12));
  CHECK(fuel_cost(g1, 300.0) + fuel_cost(g2, 100.0) + fuel_cost(g3, 300.0) ==
        doctest::Approx(857.0).epsilon(1e-12));
  CHECK(fuel_cost(g1, 300.0) + fuel_cost(g2, 150.0) + fuel_cost(g3, 300.0) ==
        doctest::Approx(1049.5).epsilon(1e-12));
  CHECK(fuel_cost(g1, 300.0) + fuel_cost(g2, 75.0) + fuel_cost(g3, 300.0) ==
        doctest::Approx(783.25).epsilon(1e-12));
}

TEST_CASE("ledger hour entries") {
  const MicrogridSpec spec = fixtures::tiny_spec();
  const Scenario sc = flat_scenario(2, 4.0);

  SUBCASE("switched-off plan on a dead scenario costs and earns nothing") {
    const Schedule z = Schedule::zeros(1, 1, 2);
    const DispatchLedger led = evaluate_ledger(spec, z, flat_scenario(2, 0.0));
    CHECK(led.total.fuel == 0.0);
    CHECK(led.total.startup == 0.0);
    CHECK(led.total.shutdown == 0.0);
    CHECK(led.total.emission == 0.0);
    CHECK(led.total.import_cost == 0.0);
    CHECK(led.total.revenue == 0.0);
    CHECK(led.total.profit == 0.0);
  }

  SUBCASE("startup charges on every off-to-on edge, including hour one") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.gen_on[0][0] = true;  // day starts off, so hour one is an edge
    s.gen_power[0][0] = 2.0;
    const DispatchLedger led = evaluate_ledger(spec, s, sc);
    CHECK(led.hours[0].startup == 0.5);
    CHECK(led.hours[0].shutdown == 0.0);
    CHECK(led.hours[1].startup == 0.0);
    CHECK(led.hours[1].shutdown == 0.5);  // on -> off edge
    CHECK(led.hours[0].fuel == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(led.hours[1].fuel == 0.0);
  }

  SUBCASE("emission cost scales linearly with dispatched power while on") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.gen_on[0][0] = true;
    s.gen_power[0][0] = 3.0;
    s.gen_power[0][1] = 5.0;  // off: must not be billed
    const DispatchLedger led = evaluate_ledger(spec, s, sc);
    const Generator& g = spec.generators[0];
    CHECK(led.hours[0].emission ==
          doctest::Approx(g.emission_price * g.emission_factor * 3.0).epsilon(1e-12));
    CHECK(led.hours[1].emission == 0.0);
    CHECK(led.hours[1].fuel == 0.0);
  }

  SUBCASE("selling earns exchange income, buying books import cost") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.sell[0] = true;
    s.grid_power[0] = 2.0;
    s.grid_power[1] = 3.0;  // sell stays false: imported power
    const DispatchLedger led = evaluate_ledger(spec, s, sc);
    // market price 1, exchange price 1, load 4
    CHECK(led.hours[0].revenue == doctest::Approx(4.0 + 2.0).epsilon(1e-12));
    CHECK(led.hours[0].import_cost == 0.0);
    CHECK(led.hours[1].revenue == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(led.hours[1].import_cost == doctest::Approx(3.0).epsilon(1e-12));
  }
}

TEST_CASE("profit identity holds hour by hour on random plans") {
  const MicrogridSpec spec = fixtures::tiny_spec();
  const Encoding enc = Encoding::of(spec);
  std::vector<double> lo, hi;
  enc.bounds(lo, hi);

  for (uint64_t trial = 0; trial < 40; ++trial) {
    Rng rng = Rng::stream(trial, 0x1edull);
    std::vector<double> pos(enc.dim());
    for (int d = 0; d < enc.dim(); ++d) pos[d] = lo[d] + rng.uniform() * (hi[d] - lo[d]);
    const Schedule s = decode(pos, spec);

    Scenario sc;
    for (int t = 0; t < spec.horizon; ++t) {
      sc.wind_power.push_back(rng.uniform() * 30.0);
      sc.pv_power.push_back(rng.uniform() * 30.0);
      sc.load.push_back(rng.uniform() * 10.0);
    }
    sc.probability = 1.0;

    const DispatchLedger led = evaluate_ledger(spec, s, sc);
    HourCosts acc;
    for (const HourCosts& h : led.hours) {
      const double cost = h.fuel + h.startup + h.shutdown + h.emission + h.import_cost;
      CHECK(h.profit == doctest::Approx(h.revenue - cost).epsilon(1e-9));
      acc.fuel += h.fuel;
      acc.startup += h.startup;
      acc.shutdown += h.shutdown;
      acc.emission += h.emission;
      acc.import_cost += h.import_cost;
      acc.revenue += h.revenue;
      acc.profit += h.profit;
    }
    CHECK(led.total.fuel == doctest::Approx(acc.fuel).epsilon(1e-9));
    CHECK(led.total.revenue == doctest::Approx(acc.revenue).epsilon(1e-9));
    CHECK(led.total.profit == doctest::Approx(acc.profit).epsilon(1e-9));

    const double cost = total_cost(spec, s, sc);
    CHECK(cost == doctest::Approx(acc.fuel + acc.startup + acc.shutdown + acc.emission +
                                  acc.import_cost)
                      .epsilon(1e-9));
    DispatchLedger led2;
    const double profit = scenario_profit(spec, s, sc, &led2);
    CHECK(profit == led.total.profit);
    CHECK(led2.total.revenue == led.total.revenue);
    CHECK(led2.total.import_cost == led.total.import_cost);
  }
}

TEST_CASE("feasibility accounting") {
  const MicrogridSpec spec = fixtures::tiny_spec();
  const Scenario dead = flat_scenario(2, 0.0);

  SUBCASE("empty plan on a dead scenario is feasible") {
    const FeasibilityReport rep = check_feasibility(spec, Schedule::zeros(1, 1, 2), dead);
    CHECK(rep.total_violation == 0.0);
  }

  SUBCASE("unserved load shows up as an hourly balance shortfall") {
    const FeasibilityReport rep =
        check_feasibility(spec, Schedule::zeros(1, 1, 2), flat_scenario(2, 4.0));
    CHECK(rep.balance[0] == 4.0);
    CHECK(rep.balance[1] == 4.0);
    CHECK(rep.total_violation == 8.0);
  }

  SUBCASE("oversupply is allowed") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.gen_on[0][0] = s.gen_on[0][1] = true;
    s.gen_power[0][0] = s.gen_power[0][1] = 5.0;
    const FeasibilityReport rep = check_feasibility(spec, s, flat_scenario(2, 1.0));
    CHECK(rep.balance[0] == 0.0);
    CHECK(rep.total_violation == 0.0);
  }

  SUBCASE("committed power outside the box is billed by distance") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.gen_on[0][0] = true;
    s.gen_power[0][0] = 0.25;  // below p_min = 1
    const FeasibilityReport rep = check_feasibility(spec, s, dead);
    CHECK(rep.gen_limit == doctest::Approx(0.75).epsilon(1e-12));
  }

  SUBCASE("power on a decommitted unit is itself a violation") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.gen_power[0][1] = 2.0;
    const FeasibilityReport rep = check_feasibility(spec, s, dead);
    CHECK(rep.gen_limit == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("short on and off runs are counted in deficit hours") {
    MicrogridSpec strict = spec;
    strict.horizon = 3;
    strict.prices.market.assign(3, 1.0);
    strict.prices.exchange.assign(3, 1.0);
    strict.loss_profile.assign(3, 0.0);
    strict.generators[0].min_up_time = 3;
    strict.generators[0].min_down_time = 3;
    Schedule s = Schedule::zeros(1, 1, 3);
    s.gen_on[0][1] = true;  // 0,1,0
    s.gen_power[0][1] = 1.0;
    const FeasibilityReport rep = check_feasibility(strict, s, flat_scenario(3, 0.0));
    // the lone on-hour is 2 short; the day-opening off-run is exempt, the
    // closing one is 2 short
    CHECK(rep.min_up == 2.0);
    CHECK(rep.min_down == 2.0);
  }

  SUBCASE("ramping beyond the hourly limits is billed by the overshoot") {
    MicrogridSpec slow = spec;
    slow.generators[0].ramp_up = 2.0;
    slow.generators[0].ramp_down = 2.0;
    Schedule s = Schedule::zeros(1, 1, 2);
    s.gen_on[0][0] = true;
    s.gen_power[0][0] = 5.0;  // from a cold start: 3 beyond ramp_up
    const FeasibilityReport rep = check_feasibility(slow, s, dead);
    // ...and the collapse back to zero in hour two is 3 beyond ramp_down
    CHECK(rep.ramp == doctest::Approx(3.0 + 3.0).epsilon(1e-12));
  }

  SUBCASE("grid flows outside the exchange band") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.sell[0] = true;
    s.grid_power[0] = 7.0;  // band is [-5, 5]
    const FeasibilityReport rep = check_feasibility(spec, s, dead);
    CHECK(rep.grid_limit == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("storage charging and discharging at once") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.ess_charge[0][0] = true;
    s.ess_discharge[0][0] = true;
    const FeasibilityReport rep = check_feasibility(spec, s, dead);
    CHECK(rep.ess_exclusivity == 1.0);
  }

  SUBCASE("idle storage with nonzero power") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.ess_power[0][0] = 1.5;
    const FeasibilityReport rep = check_feasibility(spec, s, dead);
    CHECK(rep.ess_limit == doctest::Approx(1.5).epsilon(1e-12));
  }

  SUBCASE("storage min-time deficits are scaled by the mode's power cap") {
    MicrogridSpec strict = spec;
    strict.storages[0].min_charge_time = 2;
    Schedule s = Schedule::zeros(1, 1, 2);
    s.ess_charge[0][0] = true;  // one-hour charge run, one hour short
    s.ess_power[0][0] = 1.0;
    const FeasibilityReport rep = check_feasibility(strict, s, dead);
    CHECK(rep.ess_min_time == doctest::Approx(strict.storages[0].charge_max * 1.0).epsilon(1e-12));
  }

  SUBCASE("state of charge must stay within the usable window") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.ess_discharge[0][0] = true;  // draining an empty store
    s.ess_power[0][0] = 0.9;
    const FeasibilityReport rep = check_feasibility(spec, s, dead);
    // 0.9 kW through a 0.9 discharge efficiency pulls 1 kWh below empty, and
    // the breach persists through the idle second hour
    CHECK(rep.soc == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("discharging storage can close the balance") {
    Schedule s = Schedule::zeros(1, 1, 2);
    s.ess_discharge[0][0] = true;
    s.ess_power[0][0] = 3.0;
    const FeasibilityReport rep = check_feasibility(spec, s, flat_scenario(2, 3.0));
    CHECK(rep.balance[0] == 0.0);
    CHECK(rep.balance[1] == 3.0);
  }

  SUBCASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(check_feasibility(spec, Schedule::zeros(1, 1, 3), dead), SpecError);
    CHECK_THROWS_AS(check_feasibility(spec, Schedule::zeros(2, 1, 2), dead), SpecError);
  }
}

TEST_CASE("expected profit") {
  CHECK(expected_profit({100.0, 200.0}, {0.25, 0.75}) == doctest::Approx(175.0).epsilon(1e-12));
  CHECK(expected_profit({42.0}, {1.0}) == 42.0);
  // lies between the extremes for any valid weighting
  CHECK(expected_profit({-50.0, 80.0}, {0.5, 0.5}) == doctest::Approx(15.0).epsilon(1e-12));
  CHECK_THROWS_AS(expected_profit({1.0, 2.0}, {1.0}), SpecError);
  CHECK_THROWS_AS(expected_profit({1.0, 2.0}, {0.3, 0.3}), SpecError);
}
