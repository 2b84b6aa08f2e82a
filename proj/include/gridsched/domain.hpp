#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridsched {

// Raised on malformed or invariant-violating configuration data.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Generator {
  std::string name;
  double p_min = 0.0;  // kW
  double p_max = 0.0;  // kW
  double cost_a = 0.0;  // $ per committed hour
  double cost_b = 0.0;  // $/kWh
  double cost_c = 0.0;  // $/kWh^2
  double startup_cost = 0.0;   // $
  double shutdown_cost = 0.0;  // $
  int min_up_time = 1;    // h
  int min_down_time = 1;  // h
  double ramp_up = 0.0;    // kW/h
  double ramp_down = 0.0;  // kW/h
  double emission_factor = 0.0;  // kg/kWh
  double emission_price = 0.0;   // $/kg

  bool operator==(const Generator&) const = default;
};

struct StorageUnit {
  std::string name;
  double charge_min = 0.0;     // kW
  double charge_max = 0.0;     // kW
  double discharge_min = 0.0;  // kW
  double discharge_max = 0.0;  // kW
  double capacity = 0.0;  // kWh
  double soc_max = 0.0;   // kWh
  int min_charge_time = 0;     // h
  int min_discharge_time = 0;  // h
  double charge_efficiency = 1.0;
  double discharge_efficiency = 1.0;

  bool operator==(const StorageUnit&) const = default;
};

struct WindUnit {
  std::string name;
  double v_cut_in = 0.0;   // m/s
  double v_rated = 0.0;    // m/s
  double v_cut_out = 0.0;  // m/s
  double p_rated = 0.0;    // kW
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;  // power-curve polynomial

  bool operator==(const WindUnit&) const = default;
};

struct PvUnit {
  std::string name;
  double p_stc = 0.0;   // kW at standard test conditions
  double g_stc = 0.0;   // W/m^2
  double t_cell = 0.0;  // deg C
  double k_temp = 0.0;  // 1/deg C

  bool operator==(const PvUnit&) const = default;
};

struct PriceProfile {
  std::vector<double> market;    // $/kWh paid by consumers, per hour
  std::vector<double> exchange;  // $/kWh for upstream buy/sell, per hour

  bool operator==(const PriceProfile&) const = default;
};

struct MicrogridSpec {
  std::string name;
  int horizon = 0;  // hours
  std::vector<Generator> generators;
  std::vector<StorageUnit> storages;
  std::vector<WindUnit> wind_units;
  std::vector<PvUnit> pv_units;
  PriceProfile prices;
  double grid_min = 0.0;  // kW, signed exchange lower bound (imports negative)
  double grid_max = 0.0;  // kW, signed exchange upper bound (exports positive)
  std::vector<double> loss_profile;  // kWh per hour

  bool operator==(const MicrogridSpec&) const = default;
};

// Throws SpecError naming the first violated invariant.
void validate(const MicrogridSpec& spec);

// One candidate operating plan over the horizon. Grid exchange and storage
// power are stored as magnitudes; sell/charge/discharge flags carry direction.
struct Schedule {
  int horizon = 0;
  std::vector<std::vector<uint8_t>> gen_on;        // [gen][hour]
  std::vector<std::vector<double>> gen_power;      // kW, 0 while off
  std::vector<std::vector<uint8_t>> ess_charge;    // [ess][hour]
  std::vector<std::vector<uint8_t>> ess_discharge; // [ess][hour]
  std::vector<std::vector<double>> ess_power;      // kW magnitude
  std::vector<std::vector<double>> soc;            // kWh, recursion from empty
  std::vector<uint8_t> sell;                       // r_t, 1 = exporting
  std::vector<double> grid_power;                  // kW magnitude

  // -1 charging, 0 idle, +1 discharging
  int ess_mode(int e, int t) const {
    if (ess_discharge[e][t] && !ess_charge[e][t]) return 1;
    if (ess_charge[e][t] && !ess_discharge[e][t]) return -1;
    return 0;
  }

  static Schedule zeros(int n_gen, int n_ess, int horizon);

  bool operator==(const Schedule&) const = default;
};

struct HourCosts {
  double fuel = 0.0;
  double startup = 0.0;
  double shutdown = 0.0;
  double emission = 0.0;
  double import_cost = 0.0;
  double revenue = 0.0;
  double profit = 0.0;
};

// Hour-by-hour monetary breakdown plus horizon totals.
struct DispatchLedger {
  std::vector<HourCosts> hours;
  HourCosts total;
};

}  // namespace gridsched
