#pragma once

#include <cstdint>
#include <vector>

#include "gridsched/domain.hpp"
#include "gridsched/parallel.hpp"

namespace gridsched {

struct WeibullParams {
  double shape = 0.0;
  double scale = 0.0;  // m/s

  bool operator==(const WeibullParams&) const = default;
};

struct NormalParams {
  double mean = 0.0;
  double stddev = 0.0;

  bool operator==(const NormalParams&) const = default;
};

// Hourly mean/std for every uncertain input.
struct ForecastProfile {
  std::vector<double> wind_mean, wind_std;                // m/s
  std::vector<double> irradiance_mean, irradiance_std;    // W/m^2
  std::vector<double> temperature_mean, temperature_std;  // deg C
  std::vector<double> load_mean, load_std;                // kW

  int hours() const { return static_cast<int>(wind_mean.size()); }

  bool operator==(const ForecastProfile&) const = default;
};

// One joint realization of the uncertain inputs over the horizon.
struct Scenario {
  std::vector<double> wind_power;  // kW per hour
  std::vector<double> pv_power;    // kW per hour
  std::vector<double> load;        // kW per hour
  double probability = 0.0;

  bool operator==(const Scenario&) const = default;
};

struct ScenarioSet {
  std::vector<Scenario> scenarios;

  int size() const { return static_cast<int>(scenarios.size()); }
  int horizon() const {
    return scenarios.empty() ? 0 : static_cast<int>(scenarios[0].wind_power.size());
  }

  bool operator==(const ScenarioSet&) const = default;
};

// Lanczos approximation, relative error well under 1e-10 for x in [1, 2].
double gamma_fn(double x);

// Moment fit: shape = (sigma/v_mean)^-1.086, scale = v_mean / Gamma(1 + 1/shape).
WeibullParams weibull_from_moments(double v_mean, double sigma);

double weibull_pdf(const WeibullParams& params, double v);

// Piecewise power curve: zero outside [cut-in, cut-out], rated above v_rated,
// quadratic in between, clamped to [0, p_rated].
double wind_power(const WindUnit& unit, double v);

// Irradiance-proportional output with a linear cell-temperature correction,
// clamped to >= 0.
double pv_power(const PvUnit& unit, double g_ing, double t_air);

void validate(const ForecastProfile& forecasts, int horizon);

// Monte Carlo sampling: per scenario and hour, wind speed from the hour's
// Weibull fit, irradiance/temperature/load from normal fits, mapped through
// the power curves. Each scenario weighs 1/n. Deterministic in (seed) and
// independent of thread count.
ScenarioSet generate_scenarios(const MicrogridSpec& spec, const ForecastProfile& forecasts,
                               int n, uint64_t seed,
                               ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace gridsched
