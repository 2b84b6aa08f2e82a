#pragma once

// Shared test instances: a tiny all-features spec for validation tests and
// the analytic single-generator case whose optimum is known in closed form.

#include <vector>

#include "gridsched/domain.hpp"
#include "gridsched/stochastics.hpp"

namespace fixtures {

// One of everything, all constraints satisfiable. Mutation tests flip one
// field at a time and expect validate() to object.
inline gridsched::MicrogridSpec tiny_spec() {
  gridsched::MicrogridSpec spec;
  spec.name = "tiny";
  spec.horizon = 2;

  gridsched::Generator g;
  g.name = "G1";
  g.p_min = 1.0;
  g.p_max = 5.0;
  g.cost_a = 0.0;
  g.cost_b = 1.0;
  g.cost_c = 0.0;
  g.startup_cost = 0.5;
  g.shutdown_cost = 0.5;
  g.min_up_time = 1;
  g.min_down_time = 1;
  g.ramp_up = 10.0;
  g.ramp_down = 10.0;
  g.emission_factor = 0.001;
  g.emission_price = 0.02;
  spec.generators.push_back(g);

  gridsched::StorageUnit u;
  u.name = "ESS1";
  u.charge_min = 0.0;
  u.charge_max = 3.0;
  u.discharge_min = 0.0;
  u.discharge_max = 3.0;
  u.capacity = 10.0;
  u.soc_max = 8.0;
  u.min_charge_time = 1;
  u.min_discharge_time = 1;
  u.charge_efficiency = 0.9;
  u.discharge_efficiency = 0.9;
  spec.storages.push_back(u);

  gridsched::WindUnit w;
  w.name = "WT1";
  w.v_cut_in = 3.0;
  w.v_rated = 12.0;
  w.v_cut_out = 25.0;
  w.p_rated = 100.0;
  w.k1 = 0.123;
  w.k2 = -0.096;
  w.k3 = 0.0184;
  spec.wind_units.push_back(w);

  gridsched::PvUnit pv;
  pv.name = "PV1";
  pv.p_stc = 250.0;
  pv.g_stc = 1000.0;
  pv.t_cell = 25.0;
  pv.k_temp = 0.001;
  spec.pv_units.push_back(pv);

  spec.prices.market = {1.0, 1.0};
  spec.prices.exchange = {1.0, 1.0};
  spec.grid_min = -5.0;
  spec.grid_max = 5.0;
  spec.loss_profile = {0.0, 0.0};
  return spec;
}

// Single linear-cost generator, flat load and price, no exchange: committing
// the unit at 50 kW every hour earns (2.0 - 1.0) * 50 * 24 = 1200 exactly,
// and no feasible plan earns more.
inline gridsched::MicrogridSpec toy_spec() {
  gridsched::MicrogridSpec spec;
  spec.name = "toy";
  spec.horizon = 24;

  gridsched::Generator g;
  g.name = "G1";
  g.p_min = 10.0;
  g.p_max = 100.0;
  g.cost_a = 0.0;
  g.cost_b = 1.0;
  g.cost_c = 0.0;
  g.startup_cost = 0.0;
  g.shutdown_cost = 0.0;
  g.min_up_time = 1;
  g.min_down_time = 1;
  g.ramp_up = 100.0;
  g.ramp_down = 100.0;
  g.emission_factor = 0.0;
  g.emission_price = 0.0;
  spec.generators.push_back(g);

  spec.prices.market.assign(24, 2.0);
  spec.prices.exchange.assign(24, 0.0);
  spec.grid_min = 0.0;
  spec.grid_max = 0.0;
  spec.loss_profile.assign(24, 0.0);
  return spec;
}

inline gridsched::ScenarioSet toy_scenarios() {
  gridsched::Scenario sc;
  sc.wind_power.assign(24, 0.0);
  sc.pv_power.assign(24, 0.0);
  sc.load.assign(24, 50.0);
  sc.probability = 1.0;
  gridsched::ScenarioSet set;
  set.scenarios.push_back(sc);
  return set;
}

}  // namespace fixtures
