#include "gridsched/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gridsched/parallel.hpp"
#include "gridsched/rng.hpp"

namespace gridsched {

Encoding Encoding::of(const MicrogridSpec& spec) {
  Encoding e;
  e.n_gen = static_cast<int>(spec.generators.size());
  e.n_ess = static_cast<int>(spec.storages.size());
  e.horizon = spec.horizon;
  return e;
}

void Encoding::bounds(std::vector<double>& lo, std::vector<double>& hi) const {
  lo.assign(dim(), 0.0);
  hi.assign(dim(), 1.0);
  for (int t = 0; t < horizon; ++t) {
    for (int i = 0; i < n_gen; ++i) lo[gen_power(t, i)] = -1.0;
    for (int e = 0; e < n_ess; ++e) lo[ess_power(t, e)] = -1.0;
    lo[grid(t)] = -1.0;
  }
}

namespace {

// canonical [-1,1] -> [a,b]
double affine(double x, double a, double b) {
  x = std::clamp(x, -1.0, 1.0);
  return 0.5 * (a + b) + 0.5 * x * (b - a);
}

}  // namespace

Schedule decode(const std::vector<double>& position, const MicrogridSpec& spec) {
  const Encoding enc = Encoding::of(spec);
  if (position.size() != static_cast<size_t>(enc.dim()))
    throw SpecError("decode: position length does not match encoding");
  const int T = enc.horizon;
  Schedule s = Schedule::zeros(enc.n_gen, enc.n_ess, T);

  for (int i = 0; i < enc.n_gen; ++i) {
    const Generator& g = spec.generators[i];
    // forward sweep: a unit may only change state once it has held the
    // current one long enough; the day starts after a long off period
    bool state = false;
    int held = g.min_down_time;
    for (int t = 0; t < T; ++t) {
      const bool want = position[enc.gen_logit(t, i)] > 0.5;
      if (want != state && held >= (state ? g.min_up_time : g.min_down_time)) {
        state = want;
        held = 1;
      } else {
        ++held;
      }
      s.gen_on[i][t] = state ? 1 : 0;
      s.gen_power[i][t] = state ? affine(position[enc.gen_power(t, i)], g.p_min, g.p_max) : 0.0;
    }
  }

  for (int e = 0; e < enc.n_ess; ++e) {
    const StorageUnit& su = spec.storages[e];
    double soc = 0.0;
    for (int t = 0; t < T; ++t) {
      const double lc = position[enc.ess_logit(t, e, 0)];
      const double li = position[enc.ess_logit(t, e, 1)];
      const double ld = position[enc.ess_logit(t, e, 2)];
      int mode = 0;  // ties favor idle, then charge
      if (lc > li && lc >= ld) mode = -1;
      else if (ld > li && ld > lc) mode = 1;
      if (mode == -1) {
        s.ess_charge[e][t] = 1;
        s.ess_power[e][t] = affine(position[enc.ess_power(t, e)], su.charge_min, su.charge_max);
        soc += su.charge_efficiency * s.ess_power[e][t];
      } else if (mode == 1) {
        s.ess_discharge[e][t] = 1;
        s.ess_power[e][t] =
            affine(position[enc.ess_power(t, e)], su.discharge_min, su.discharge_max);
        soc -= s.ess_power[e][t] / su.discharge_efficiency;
      }
      s.soc[e][t] = soc;
    }
  }

  for (int t = 0; t < T; ++t) {
    const bool sell = position[enc.sell_logit(t)] > 0.5;
    const double v = affine(position[enc.grid(t)], spec.grid_min, spec.grid_max);
    s.sell[t] = sell ? 1 : 0;
    // the signed grid axis only carries power in the flagged direction; a
    // mismatched sign decodes to no exchange rather than a mirrored one
    s.grid_power[t] = sell ? std::max(0.0, std::min(v, spec.grid_max))
                           : std::max(0.0, std::min(-v, -spec.grid_min));
  }
  return s;
}

double fitness(const MicrogridSpec& spec, const std::vector<double>& position,
               const ScenarioSet& scenarios, double penalty_weight) {
  const Schedule s = decode(position, spec);
  double profit = 0.0;
  double violation = 0.0;
  for (const Scenario& sc : scenarios.scenarios) {
    profit += sc.probability * scenario_profit(spec, s, sc);
    violation += sc.probability * check_feasibility(spec, s, sc).total_violation;
  }
  return profit - penalty_weight * violation;
}

OptimizeResult optimize(const MicrogridSpec& spec, const ScenarioSet& scenarios,
                        const PsoConfig& config) {
  if (scenarios.scenarios.empty()) throw SpecError("optimize: scenario set is empty");
  if (config.swarm_size < 2) throw SpecError("optimize: swarm_size must be >= 2");
  if (config.iterations < 1) throw SpecError("optimize: iterations must be >= 1");
  if (config.penalty_weight <= 0.0) throw SpecError("optimize: penalty_weight must be > 0");
  double mass = 0.0;
  for (const Scenario& sc : scenarios.scenarios) mass += sc.probability;
  if (std::abs(mass - 1.0) > 1e-9)
    throw SpecError("optimize: scenario probabilities must sum to 1");

  const Encoding enc = Encoding::of(spec);
  const int dim = enc.dim();
  const int n = config.swarm_size;
  std::vector<double> lo, hi;
  enc.bounds(lo, hi);
  std::vector<double> vmax(dim);
  for (int d = 0; d < dim; ++d) vmax[d] = config.velocity_clamp * (hi[d] - lo[d]);

  std::vector<std::vector<double>> pos(n, std::vector<double>(dim));
  std::vector<std::vector<double>> vel(n, std::vector<double>(dim, 0.0));
  std::vector<std::vector<double>> pbest(n);
  std::vector<double> pbest_fit(n, -std::numeric_limits<double>::infinity());
  std::vector<double> fit(n);

  for (int p = 0; p < n; ++p) {
    Rng rng = Rng::stream(config.seed, RngTag::SwarmInit, static_cast<uint64_t>(p), 0);
    for (int d = 0; d < dim; ++d) pos[p][d] = lo[d] + rng.uniform() * (hi[d] - lo[d]);
  }

#pragma omp parallel for num_threads(effective_threads()) schedule(static)
  for (int p = 0; p < n; ++p)
    fit[p] = fitness(spec, pos[p], scenarios, config.penalty_weight);

  std::vector<double> gbest;
  double gbest_fit = -std::numeric_limits<double>::infinity();
  for (int p = 0; p < n; ++p) {
    pbest[p] = pos[p];
    pbest_fit[p] = fit[p];
    if (fit[p] > gbest_fit) {
      gbest_fit = fit[p];
      gbest = pos[p];
    }
  }

  OptimizeResult res;
  res.trace.reserve(config.iterations);

  for (int k = 0; k < config.iterations; ++k) {
    const double frac = static_cast<double>(k) / config.iterations;
    const double w = config.w_start + (config.w_end - config.w_start) * frac;
    const double c1 = config.c1_start + (config.c1_end - config.c1_start) * frac;
    const double c2 = config.c2_start + (config.c2_end - config.c2_start) * frac;

#pragma omp parallel for num_threads(effective_threads()) schedule(static)
    for (int p = 0; p < n; ++p) {
      Rng rng = Rng::stream(config.seed, RngTag::SwarmStep, static_cast<uint64_t>(p),
                            static_cast<uint64_t>(k));
      for (int d = 0; d < dim; ++d) {
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        double v = w * vel[p][d] + c1 * r1 * (pbest[p][d] - pos[p][d]) +
                   c2 * r2 * (gbest[d] - pos[p][d]);
        v = std::clamp(v, -vmax[d], vmax[d]);
        vel[p][d] = v;
        pos[p][d] = std::clamp(pos[p][d] + v, lo[d], hi[d]);
      }
      if (rng.uniform() < config.restart_probability) {
        // restart one coordinate of this particle uniformly in its box: a
        // collapsed swarm stops sampling the far side of the commitment
        // thresholds entirely, and velocities capped by the clamp cannot
        // carry a particle back across; the occasional fresh draw keeps
        // every threshold testable while personal/global bests are untouched
        const int j = static_cast<int>(rng.uniform() * dim) % dim;
        pos[p][j] = lo[j] + rng.uniform() * (hi[j] - lo[j]);
      }
      fit[p] = fitness(spec, pos[p], scenarios, config.penalty_weight);
    }

    for (int p = 0; p < n; ++p) {
      if (fit[p] > pbest_fit[p]) {
        pbest_fit[p] = fit[p];
        pbest[p] = pos[p];
      }
      if (fit[p] > gbest_fit) {
        gbest_fit = fit[p];
        gbest = pos[p];
      }
    }
    res.trace.push_back(gbest_fit);
  }

  res.best = decode(gbest, spec);
  res.best_fitness = gbest_fit;
  const size_t n_sc = scenarios.scenarios.size();
  res.profits.resize(n_sc);
  res.ledgers.resize(n_sc);
  res.feasibility.resize(n_sc);
  for (size_t i = 0; i < n_sc; ++i) {
    const Scenario& sc = scenarios.scenarios[i];
    res.profits[i] = scenario_profit(spec, res.best, sc, &res.ledgers[i]);
    res.feasibility[i] = check_feasibility(spec, res.best, sc);
    res.best_profit += sc.probability * res.profits[i];
    res.weighted_violation += sc.probability * res.feasibility[i].total_violation;
  }
  return res;
}

}  // namespace gridsched
