#pragma once

#include <vector>

#include "gridsched/domain.hpp"
#include "gridsched/stochastics.hpp"

namespace gridsched {

// Violation magnitudes per constraint family; all zero for a feasible plan.
struct FeasibilityReport {
  std::vector<double> balance;  // kW shortfall per hour (supply >= load + loss)
  double gen_limit = 0.0;       // kW outside commitment-scaled box
  double grid_limit = 0.0;      // kW outside signed exchange band
  double ess_limit = 0.0;       // kW outside mode-scaled box
  double ess_exclusivity = 0.0; // hours charging and discharging at once
  double ess_min_time = 0.0;    // deficit hours vs. min charge/discharge time
  double min_up = 0.0;          // deficit hours vs. minimum up time
  double min_down = 0.0;        // deficit hours vs. minimum down time
  double ramp = 0.0;            // kW beyond hourly ramp bounds
  double soc = 0.0;             // kWh outside [0, soc_max]
  double total_violation = 0.0;
};

// Quadratic fuel curve a + b*p + c*p^2; committed-hours gating is the caller's
// concern.
double fuel_cost(const Generator& g, double p);

// Hourly income: consumer payments plus exchange income while selling.
double revenue(const MicrogridSpec& spec, const Schedule& schedule, const Scenario& scenario,
               int hour);

// Full hour-by-hour monetary breakdown. Startup charges on each off->on
// transition and shutdown on each on->off (units start the day off).
DispatchLedger evaluate_ledger(const MicrogridSpec& spec, const Schedule& schedule,
                               const Scenario& scenario);

// Sum of fuel, startup, shutdown, emission, and import over the horizon.
double total_cost(const MicrogridSpec& spec, const Schedule& schedule, const Scenario& scenario);

// Revenue minus total cost; optionally hands back the ledger it came from.
double scenario_profit(const MicrogridSpec& spec, const Schedule& schedule,
                       const Scenario& scenario, DispatchLedger* ledger = nullptr);

// Probability-weighted profit; probabilities must sum to 1 within 1e-9.
double expected_profit(const std::vector<double>& profits,
                       const std::vector<double>& probabilities);

FeasibilityReport check_feasibility(const MicrogridSpec& spec, const Schedule& schedule,
                                    const Scenario& scenario);

}  // namespace gridsched
