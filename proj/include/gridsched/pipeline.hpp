#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gridsched/optimizer.hpp"
#include "gridsched/reduction.hpp"
#include "gridsched/spec_io.hpp"

namespace gridsched {

enum class RunMode { PerScenario, Expected };

struct PipelineOptions {
  std::filesystem::path config;
  std::filesystem::path out_dir = "out";
  int n_scenarios = 1000;
  int reduce_to = 10;
  uint64_t seed = 0;
  RunMode mode = RunMode::PerScenario;
  PsoConfig pso;  // seed field is ignored; derived from the pipeline seed
};

struct PipelineResult {
  ReductionResult reduction;
  std::vector<double> profits;  // per reduced scenario, selection order
  double expected = 0.0;        // probability-weighted profit
  int best_index = 0;           // position in the reduced set
  OptimizeResult best;          // run shown in schedule.csv / ledger.csv
  double weighted_violation = 0.0;
  std::vector<std::filesystem::path> artifacts;
};

// generate -> reduce -> optimize -> write artifacts into out_dir:
// scenarios.csv, reduced.csv, reduced_report.json, schedule.csv, ledger.csv,
// profits.csv, convergence.csv, expected_profit.txt, manifest.json.
// Per-scenario mode runs one search per reduced scenario and reports the most
// profitable one; expected mode runs a single search against all of them.
PipelineResult run_pipeline(const PipelineOptions& opts);

}  // namespace gridsched
