#include "gridsched/domain.hpp"

#include <string>

namespace gridsched {

namespace {

void fail(const std::string& where, const std::string& what) {
  throw SpecError(where + ": " + what);
}

void check_nonneg(double v, const std::string& where, const std::string& field) {
  if (v < 0.0) fail(where, field + " must be >= 0");
}

}  // namespace

void validate(const MicrogridSpec& spec) {
  const int T = spec.horizon;
  if (T < 0) fail("spec", "horizon must be >= 0");

  for (size_t i = 0; i < spec.generators.size(); ++i) {
    const auto& g = spec.generators[i];
    const std::string where = "generators[" + std::to_string(i) + "]";
    if (g.p_min < 0.0) fail(where, "p_min must be >= 0");
    if (g.p_min > g.p_max) fail(where, "p_min exceeds p_max");
    check_nonneg(g.cost_a, where, "cost_a");
    check_nonneg(g.cost_b, where, "cost_b");
    check_nonneg(g.cost_c, where, "cost_c");
    check_nonneg(g.startup_cost, where, "startup_cost");
    check_nonneg(g.shutdown_cost, where, "shutdown_cost");
    check_nonneg(g.emission_factor, where, "emission_factor");
    check_nonneg(g.emission_price, where, "emission_price");
    if (g.min_up_time < 0) fail(where, "min_up_time must be >= 0");
    if (g.min_down_time < 0) fail(where, "min_down_time must be >= 0");
    if (g.ramp_up <= 0.0) fail(where, "ramp_up must be > 0");
    if (g.ramp_down <= 0.0) fail(where, "ramp_down must be > 0");
  }

  for (size_t i = 0; i < spec.storages.size(); ++i) {
    const auto& s = spec.storages[i];
    const std::string where = "storages[" + std::to_string(i) + "]";
    if (s.charge_min < 0.0) fail(where, "charge_min must be >= 0");
    if (s.charge_min > s.charge_max) fail(where, "charge_min exceeds charge_max");
    if (s.discharge_min < 0.0) fail(where, "discharge_min must be >= 0");
    if (s.discharge_min > s.discharge_max) fail(where, "discharge_min exceeds discharge_max");
    if (s.soc_max <= 0.0) fail(where, "soc_max must be > 0");
    if (s.soc_max > s.capacity) fail(where, "soc_max exceeds capacity");
    if (s.min_charge_time < 0) fail(where, "min_charge_time must be >= 0");
    if (s.min_discharge_time < 0) fail(where, "min_discharge_time must be >= 0");
    if (s.charge_efficiency <= 0.0 || s.charge_efficiency > 1.0)
      fail(where, "charge_efficiency must be in (0, 1]");
    if (s.discharge_efficiency <= 0.0 || s.discharge_efficiency > 1.0)
      fail(where, "discharge_efficiency must be in (0, 1]");
  }

  for (size_t i = 0; i < spec.wind_units.size(); ++i) {
    const auto& w = spec.wind_units[i];
    const std::string where = "wind_units[" + std::to_string(i) + "]";
    if (!(0.0 < w.v_cut_in && w.v_cut_in < w.v_rated && w.v_rated < w.v_cut_out))
      fail(where, "wind speeds must satisfy 0 < cut_in < rated < cut_out");
    if (w.p_rated <= 0.0) fail(where, "p_rated must be > 0");
  }

  for (size_t i = 0; i < spec.pv_units.size(); ++i) {
    const auto& p = spec.pv_units[i];
    const std::string where = "pv_units[" + std::to_string(i) + "]";
    if (p.p_stc <= 0.0) fail(where, "p_stc must be > 0");
    if (p.g_stc <= 0.0) fail(where, "g_stc must be > 0");
  }

  if (spec.prices.market.size() != static_cast<size_t>(T))
    fail("prices.market", "length must equal horizon");
  if (spec.prices.exchange.size() != static_cast<size_t>(T))
    fail("prices.exchange", "length must equal horizon");
  for (size_t t = 0; t < spec.prices.market.size(); ++t)
    if (spec.prices.market[t] < 0.0)
      fail("prices.market[" + std::to_string(t) + "]", "price must be >= 0");
  for (size_t t = 0; t < spec.prices.exchange.size(); ++t)
    if (spec.prices.exchange[t] < 0.0)
      fail("prices.exchange[" + std::to_string(t) + "]", "price must be >= 0");

  if (spec.grid_min > spec.grid_max) fail("spec", "grid_min exceeds grid_max");

  if (spec.loss_profile.size() != static_cast<size_t>(T))
    fail("loss_profile", "length must equal horizon");
  for (size_t t = 0; t < spec.loss_profile.size(); ++t)
    if (spec.loss_profile[t] < 0.0)
      fail("loss_profile[" + std::to_string(t) + "]", "loss must be >= 0");
}

Schedule Schedule::zeros(int n_gen, int n_ess, int horizon) {
  Schedule s;
  s.horizon = horizon;
  s.gen_on.assign(n_gen, std::vector<uint8_t>(horizon, 0));
  s.gen_power.assign(n_gen, std::vector<double>(horizon, 0.0));
  s.ess_charge.assign(n_ess, std::vector<uint8_t>(horizon, 0));
  s.ess_discharge.assign(n_ess, std::vector<uint8_t>(horizon, 0));
  s.ess_power.assign(n_ess, std::vector<double>(horizon, 0.0));
  s.soc.assign(n_ess, std::vector<double>(horizon, 0.0));
  s.sell.assign(horizon, 0);
  s.grid_power.assign(horizon, 0.0);
  return s;
}

}  // namespace gridsched
