#include "gridsched/stochastics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gridsched/rng.hpp"

namespace gridsched {

double gamma_fn(double x) {
  // Lanczos, g = 7, 9 coefficients.
  static const double coef[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double pi = std::numbers::pi;
  if (x < 0.5) return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
  x -= 1.0;
  double a = coef[0];
  for (int i = 1; i < 9; ++i) a += coef[i] / (x + i);
  const double t = x + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

WeibullParams weibull_from_moments(double v_mean, double sigma) {
  if (v_mean <= 0.0 || sigma <= 0.0)
    throw SpecError("weibull_from_moments: v_mean and sigma must be > 0");
  WeibullParams p;
  p.shape = std::pow(sigma / v_mean, -1.086);
  p.scale = v_mean / gamma_fn(1.0 + 1.0 / p.shape);
  return p;
}

double weibull_pdf(const WeibullParams& params, double v) {
  const double z = v / params.scale;
  return (params.shape / params.scale) * std::pow(z, params.shape - 1.0) *
         std::exp(-std::pow(z, params.shape));
}

double wind_power(const WindUnit& unit, double v) {
  if (v < unit.v_cut_in || v > unit.v_cut_out) return 0.0;
  if (v >= unit.v_rated) return unit.p_rated;
  const double frac = unit.k1 + unit.k2 * v + unit.k3 * v * v;
  return std::clamp(frac * unit.p_rated, 0.0, unit.p_rated);
}

double pv_power(const PvUnit& unit, double g_ing, double t_air) {
  const double p = unit.p_stc * (g_ing / unit.g_stc) *
                   (1.0 + unit.k_temp * (unit.t_cell - t_air));
  return std::max(p, 0.0);
}

void validate(const ForecastProfile& f, int horizon) {
  const size_t T = static_cast<size_t>(horizon);
  auto check_len = [&](const std::vector<double>& v, const char* name) {
    if (v.size() != T)
      throw SpecError(std::string("forecasts: ") + name + " length must equal horizon");
  };
  check_len(f.wind_mean, "wind_mean");
  check_len(f.wind_std, "wind_std");
  check_len(f.irradiance_mean, "irradiance_mean");
  check_len(f.irradiance_std, "irradiance_std");
  check_len(f.temperature_mean, "temperature_mean");
  check_len(f.temperature_std, "temperature_std");
  check_len(f.load_mean, "load_mean");
  check_len(f.load_std, "load_std");
  auto check_nonneg = [&](const std::vector<double>& v, const char* name) {
    for (double x : v)
      if (x < 0.0)
        throw SpecError(std::string("forecasts: ") + name + " must be >= 0");
  };
  check_nonneg(f.wind_mean, "wind_mean");
  check_nonneg(f.wind_std, "wind_std");
  check_nonneg(f.irradiance_mean, "irradiance_mean");
  check_nonneg(f.irradiance_std, "irradiance_std");
  check_nonneg(f.temperature_std, "temperature_std");
  check_nonneg(f.load_mean, "load_mean");
  check_nonneg(f.load_std, "load_std");
}

namespace {

double sample_wind_speed(double mean, double std, Rng& rng) {
  if (mean <= 0.0) return 0.0;
  if (std <= 0.0) return mean;
  const WeibullParams p = weibull_from_moments(mean, std);
  return rng.weibull(p.shape, p.scale);
}

double sample_normal(double mean, double std, Rng& rng) {
  return std <= 0.0 ? mean : rng.normal(mean, std);
}

}  // namespace

ScenarioSet generate_scenarios(const MicrogridSpec& spec, const ForecastProfile& forecasts,
                               int n, uint64_t seed, ExecPolicy policy) {
  if (n < 1) throw SpecError("generate_scenarios: scenario count must be >= 1");
  validate(forecasts, spec.horizon);

  const int T = spec.horizon;
  ScenarioSet out;
  out.scenarios.resize(n);

  auto fill = [&](int s) {
    Scenario& sc = out.scenarios[s];
    sc.wind_power.resize(T);
    sc.pv_power.resize(T);
    sc.load.resize(T);
    sc.probability = 1.0 / n;
    const auto us = static_cast<uint64_t>(s);
    for (int t = 0; t < T; ++t) {
      const auto ut = static_cast<uint64_t>(t);

      Rng wind_rng = Rng::stream(seed, RngTag::WindSpeed, us, ut);
      const double v = sample_wind_speed(forecasts.wind_mean[t], forecasts.wind_std[t], wind_rng);
      double wind = 0.0;
      for (const auto& u : spec.wind_units) wind += wind_power(u, v);
      sc.wind_power[t] = wind;

      Rng irr_rng = Rng::stream(seed, RngTag::Irradiance, us, ut);
      const double g = std::max(
          0.0, sample_normal(forecasts.irradiance_mean[t], forecasts.irradiance_std[t], irr_rng));
      Rng temp_rng = Rng::stream(seed, RngTag::Temperature, us, ut);
      const double t_air =
          sample_normal(forecasts.temperature_mean[t], forecasts.temperature_std[t], temp_rng);
      double pv = 0.0;
      for (const auto& u : spec.pv_units) pv += pv_power(u, g, t_air);
      sc.pv_power[t] = pv;

      Rng load_rng = Rng::stream(seed, RngTag::LoadDemand, us, ut);
      sc.load[t] =
          std::max(0.0, sample_normal(forecasts.load_mean[t], forecasts.load_std[t], load_rng));
    }
  };

  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for num_threads(effective_threads()) schedule(static)
    for (int s = 0; s < n; ++s) fill(s);
  } else {
    for (int s = 0; s < n; ++s) fill(s);
  }
  return out;
}

}  // namespace gridsched
