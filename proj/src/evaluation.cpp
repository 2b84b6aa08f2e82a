#include "gridsched/evaluation.hpp"

#include <algorithm>
#include <cmath>

namespace gridsched {

namespace {

void check_dims(const MicrogridSpec& spec, const Schedule& schedule, const Scenario& scenario) {
  const size_t T = static_cast<size_t>(spec.horizon);
  if (schedule.horizon != spec.horizon || scenario.load.size() != T ||
      scenario.wind_power.size() != T || scenario.pv_power.size() != T)
    throw SpecError("evaluation: schedule/scenario horizon mismatch");
  if (schedule.gen_on.size() != spec.generators.size() ||
      schedule.ess_charge.size() != spec.storages.size())
    throw SpecError("evaluation: schedule unit count mismatch");
}

double effective(const Schedule& s, int i, int t) {
  return s.gen_on[i][t] ? s.gen_power[i][t] : 0.0;
}

// Hours missing from active runs shorter than min_len. A run touching t=0
// extends pre-horizon history when exempt_initial is set.
double run_deficits(const std::vector<uint8_t>& active, int min_len, bool exempt_initial) {
  const int T = static_cast<int>(active.size());
  double deficit = 0.0;
  int t = 0;
  while (t < T) {
    if (!active[t]) {
      ++t;
      continue;
    }
    const int start = t;
    while (t < T && active[t]) ++t;
    if (start == 0 && exempt_initial) continue;
    deficit += std::max(0, min_len - (t - start));
  }
  return deficit;
}

std::vector<uint8_t> negate(const std::vector<uint8_t>& v) {
  std::vector<uint8_t> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] ? 0 : 1;
  return out;
}

}  // namespace

double fuel_cost(const Generator& g, double p) {
  return g.cost_a + g.cost_b * p + g.cost_c * p * p;
}

double revenue(const MicrogridSpec& spec, const Schedule& schedule, const Scenario& scenario,
               int hour) {
  const double sale =
      schedule.sell[hour] ? spec.prices.exchange[hour] * schedule.grid_power[hour] : 0.0;
  return spec.prices.market[hour] * scenario.load[hour] + sale;
}

DispatchLedger evaluate_ledger(const MicrogridSpec& spec, const Schedule& schedule,
                               const Scenario& scenario) {
  check_dims(spec, schedule, scenario);
  const int T = spec.horizon;
  DispatchLedger ledger;
  ledger.hours.resize(T);
  for (int t = 0; t < T; ++t) {
    HourCosts& h = ledger.hours[t];
    for (size_t i = 0; i < spec.generators.size(); ++i) {
      const Generator& g = spec.generators[i];
      const bool on = schedule.gen_on[i][t];
      const bool was_on = t > 0 && schedule.gen_on[i][t - 1];
      if (on) {
        const double p = schedule.gen_power[i][t];
        h.fuel += fuel_cost(g, p);
        h.emission += g.emission_price * g.emission_factor * p;
      }
      if (on && !was_on) h.startup += g.startup_cost;
      if (!on && was_on) h.shutdown += g.shutdown_cost;
    }
    const double grid = schedule.grid_power[t];
    if (!schedule.sell[t]) h.import_cost = spec.prices.exchange[t] * grid;
    h.revenue = revenue(spec, schedule, scenario, t);
    h.profit = h.revenue - h.fuel - h.startup - h.shutdown - h.emission - h.import_cost;

    ledger.total.fuel += h.fuel;
    ledger.total.startup += h.startup;
    ledger.total.shutdown += h.shutdown;
    ledger.total.emission += h.emission;
    ledger.total.import_cost += h.import_cost;
    ledger.total.revenue += h.revenue;
    ledger.total.profit += h.profit;
  }
  return ledger;
}

double total_cost(const MicrogridSpec& spec, const Schedule& schedule, const Scenario& scenario) {
  const DispatchLedger ledger = evaluate_ledger(spec, schedule, scenario);
  const HourCosts& t = ledger.total;
  return t.fuel + t.startup + t.shutdown + t.emission + t.import_cost;
}

double scenario_profit(const MicrogridSpec& spec, const Schedule& schedule,
                       const Scenario& scenario, DispatchLedger* ledger) {
  DispatchLedger l = evaluate_ledger(spec, schedule, scenario);
  const double profit = l.total.profit;
  if (ledger) *ledger = std::move(l);
  return profit;
}

double expected_profit(const std::vector<double>& profits,
                       const std::vector<double>& probabilities) {
  if (profits.size() != probabilities.size())
    throw SpecError("expected_profit: profits/probabilities size mismatch");
  double mass = 0.0;
  for (double p : probabilities) mass += p;
  if (std::abs(mass - 1.0) > 1e-9)
    throw SpecError("expected_profit: probabilities must sum to 1");
  double acc = 0.0;
  for (size_t i = 0; i < profits.size(); ++i) acc += probabilities[i] * profits[i];
  return acc;
}

FeasibilityReport check_feasibility(const MicrogridSpec& spec, const Schedule& schedule,
                                    const Scenario& scenario) {
  check_dims(spec, schedule, scenario);
  const int T = spec.horizon;
  FeasibilityReport rep;
  rep.balance.assign(T, 0.0);

  for (int t = 0; t < T; ++t) {
    double supply = scenario.wind_power[t] + scenario.pv_power[t];
    for (size_t i = 0; i < spec.generators.size(); ++i) supply += effective(schedule, i, t);
    for (size_t e = 0; e < spec.storages.size(); ++e) {
      const int mode = schedule.ess_mode(static_cast<int>(e), t);
      supply += mode * schedule.ess_power[e][t];
    }
    const double grid = schedule.grid_power[t];
    supply += schedule.sell[t] ? -grid : grid;
    rep.balance[t] = std::max(0.0, scenario.load[t] + spec.loss_profile[t] - supply);
  }

  for (size_t i = 0; i < spec.generators.size(); ++i) {
    const Generator& g = spec.generators[i];
    for (int t = 0; t < T; ++t) {
      const double x = schedule.gen_on[i][t] ? 1.0 : 0.0;
      const double p = schedule.gen_power[i][t];
      rep.gen_limit += std::max(0.0, p - g.p_max * x) + std::max(0.0, g.p_min * x - p);
      const double prev = t > 0 ? effective(schedule, static_cast<int>(i), t - 1) : 0.0;
      const double cur = effective(schedule, static_cast<int>(i), t);
      rep.ramp += std::max(0.0, cur - prev - g.ramp_up) + std::max(0.0, prev - cur - g.ramp_down);
    }
    rep.min_up += run_deficits(schedule.gen_on[i], g.min_up_time, false);
    rep.min_down += run_deficits(negate(schedule.gen_on[i]), g.min_down_time, true);
  }

  for (int t = 0; t < T; ++t) {
    const double v = schedule.sell[t] ? schedule.grid_power[t] : -schedule.grid_power[t];
    rep.grid_limit += std::max(0.0, v - spec.grid_max) + std::max(0.0, spec.grid_min - v);
  }

  for (size_t e = 0; e < spec.storages.size(); ++e) {
    const StorageUnit& s = spec.storages[e];
    double soc = 0.0;
    for (int t = 0; t < T; ++t) {
      if (schedule.ess_charge[e][t] && schedule.ess_discharge[e][t]) rep.ess_exclusivity += 1.0;
      const int mode = schedule.ess_mode(static_cast<int>(e), t);
      const double p = schedule.ess_power[e][t];
      if (mode == -1) {
        rep.ess_limit += std::max(0.0, p - s.charge_max) + std::max(0.0, s.charge_min - p);
        soc += s.charge_efficiency * p;
      } else if (mode == 1) {
        rep.ess_limit += std::max(0.0, p - s.discharge_max) + std::max(0.0, s.discharge_min - p);
        soc -= p / s.discharge_efficiency;
      } else {
        rep.ess_limit += std::abs(p);
      }
      rep.soc += std::max(0.0, soc - s.soc_max) + std::max(0.0, -soc);
    }
    // deficits are counted in hours; scale by the mode's power cap so the
    // magnitude is energy-like and comparable with balance/SOC breaches
    rep.ess_min_time +=
        s.charge_max * run_deficits(schedule.ess_charge[e], s.min_charge_time, false);
    rep.ess_min_time +=
        s.discharge_max * run_deficits(schedule.ess_discharge[e], s.min_discharge_time, false);
  }

  rep.total_violation = rep.gen_limit + rep.grid_limit + rep.ess_limit + rep.ess_exclusivity +
                        rep.ess_min_time + rep.min_up + rep.min_down + rep.ramp + rep.soc;
  for (double b : rep.balance) rep.total_violation += b;
  return rep;
}

}  // namespace gridsched
