#pragma once

#include <cstdint>
#include <vector>

#include "gridsched/domain.hpp"
#include "gridsched/evaluation.hpp"
#include "gridsched/stochastics.hpp"

namespace gridsched {

// Flat position-vector layout: per hour, each generator contributes a
// commitment logit and a power entry, each storage unit three mode logits
// (charge/idle/discharge) and a power entry, then a sell logit and a grid
// entry. Logits live in [0,1]; continuous entries in [-1,1] and are affinely
// mapped into their physical boxes on decode.
struct Encoding {
  int n_gen = 0;
  int n_ess = 0;
  int horizon = 0;

  static Encoding of(const MicrogridSpec& spec);

  int block() const { return n_gen * 2 + n_ess * 4 + 2; }
  int dim() const { return horizon * block(); }

  int gen_logit(int t, int i) const { return t * block() + i * 2; }
  int gen_power(int t, int i) const { return t * block() + i * 2 + 1; }
  int ess_logit(int t, int e, int mode) const {
    return t * block() + n_gen * 2 + e * 4 + mode;
  }
  int ess_power(int t, int e) const { return t * block() + n_gen * 2 + e * 4 + 3; }
  int sell_logit(int t) const { return t * block() + n_gen * 2 + n_ess * 4; }
  int grid(int t) const { return t * block() + n_gen * 2 + n_ess * 4 + 1; }

  // Canonical search box per dimension.
  void bounds(std::vector<double>& lo, std::vector<double>& hi) const;
};

struct PsoConfig {
  int swarm_size = 50;
  int iterations = 500;
  double w_start = 0.9, w_end = 0.4;
  double c1_start = 2.5, c1_end = 0.5;
  double c2_start = 0.5, c2_end = 2.5;
  double velocity_clamp = 0.2;  // fraction of box width
  double penalty_weight = 2.3;
  // With this per-particle, per-iteration probability, one randomly chosen
  // coordinate of the particle is redrawn uniformly in its box after the
  // regular update. A collapsed swarm otherwise stops sampling the far side
  // of the commitment thresholds entirely (velocities capped by the clamp
  // cannot carry a particle back across); the occasional fresh draw keeps
  // every threshold testable, and elitist best tracking guarantees the
  // incumbent is never lost. Set to 0 to disable.
  double restart_probability = 0.03;
  uint64_t seed = 0;
};

struct OptimizeResult {
  Schedule best;
  double best_fitness = 0.0;  // penalized objective reached by the search
  double best_profit = 0.0;   // probability-weighted profit of best
  std::vector<double> profits;              // per scenario
  std::vector<DispatchLedger> ledgers;      // per scenario
  std::vector<FeasibilityReport> feasibility;  // per scenario
  double weighted_violation = 0.0;          // probability-weighted total violation
  std::vector<double> trace;                // best fitness after each iteration
};

// Turns a position vector into a plan that honors unit boxes, storage-mode
// exclusivity, and minimum up/down times by construction. Ramps, balance,
// state of charge, and storage minimum-time rules are left to the penalty.
Schedule decode(const std::vector<double>& position, const MicrogridSpec& spec);

// Probability-weighted profit minus penalty_weight times the
// probability-weighted violation total.
double fitness(const MicrogridSpec& spec, const std::vector<double>& position,
               const ScenarioSet& scenarios, double penalty_weight);

// Particle swarm search with linearly scheduled inertia and acceleration
// coefficients. Deterministic in config.seed regardless of thread count.
OptimizeResult optimize(const MicrogridSpec& spec, const ScenarioSet& scenarios,
                        const PsoConfig& config);

}  // namespace gridsched
