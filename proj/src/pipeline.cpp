#include "gridsched/pipeline.hpp"

#include <chrono>
#include <fstream>

#include "gridsched/evaluation.hpp"
#include "gridsched/io.hpp"
#include "gridsched/rng.hpp"

#include <json.hpp>

namespace gridsched {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

PipelineResult run_pipeline(const PipelineOptions& opts) {
  const auto t_total = Clock::now();
  const CaseFile c = load_case(opts.config);
  std::filesystem::create_directories(opts.out_dir);

  PipelineResult res;
  auto emit = [&](const std::string& name) {
    res.artifacts.push_back(opts.out_dir / name);
    return res.artifacts.back();
  };

  auto t_stage = Clock::now();
  const ScenarioSet generated =
      generate_scenarios(c.spec, c.forecasts, opts.n_scenarios, opts.seed);
  write_scenarios_csv(emit("scenarios.csv"), generated);
  const double gen_ms = ms_since(t_stage);

  t_stage = Clock::now();
  res.reduction = fast_forward(generated, opts.reduce_to);
  const ScenarioSet reduced = redistribute(generated, res.reduction);
  write_scenarios_csv(emit("reduced.csv"), reduced, &res.reduction.selected);
  write_reduction_report(emit("reduced_report.json"), res.reduction);
  const double reduce_ms = ms_since(t_stage);

  t_stage = Clock::now();
  PsoConfig cfg = opts.pso;
  if (opts.mode == RunMode::PerScenario) {
    std::vector<OptimizeResult> runs(reduced.scenarios.size());
    res.profits.resize(reduced.scenarios.size());
    for (size_t i = 0; i < reduced.scenarios.size(); ++i) {
      ScenarioSet one;
      one.scenarios.push_back(reduced.scenarios[i]);
      one.scenarios[0].probability = 1.0;
      cfg.seed = derive_seed(opts.seed, static_cast<uint64_t>(res.reduction.selected[i]));
      runs[i] = optimize(c.spec, one, cfg);
      res.profits[i] = runs[i].best_profit;
    }
    res.expected = expected_profit(res.profits, res.reduction.new_probability);
    res.best_index = 0;
    for (size_t i = 1; i < res.profits.size(); ++i)
      if (res.profits[i] > res.profits[res.best_index]) res.best_index = static_cast<int>(i);
    for (size_t i = 0; i < res.profits.size(); ++i)
      res.weighted_violation += res.reduction.new_probability[i] * runs[i].weighted_violation;
    res.best = std::move(runs[res.best_index]);
  } else {
    cfg.seed = opts.seed;
    res.best = optimize(c.spec, reduced, cfg);
    res.profits = res.best.profits;
    res.expected = res.best.best_profit;
    res.best_index = 0;
    for (size_t i = 1; i < res.profits.size(); ++i)
      if (res.profits[i] > res.profits[res.best_index]) res.best_index = static_cast<int>(i);
    res.weighted_violation = res.best.weighted_violation;
  }
  const double optimize_ms = ms_since(t_stage);

  write_schedule_csv(emit("schedule.csv"), c.spec, res.best.best);
  const size_t ledger_idx =
      opts.mode == RunMode::PerScenario ? 0 : static_cast<size_t>(res.best_index);
  write_ledger_csv(emit("ledger.csv"), c.spec, res.best.best, res.best.ledgers[ledger_idx]);
  write_profits_csv(emit("profits.csv"), res.reduction.selected, res.reduction.new_probability,
                    res.profits);
  write_convergence_csv(emit("convergence.csv"), res.best.trace);
  write_expected_profit(emit("expected_profit.txt"), res.expected);

  nlohmann::json manifest;
  manifest["config"] = opts.config.string();
  manifest["seed"] = opts.seed;
  manifest["n_generated"] = opts.n_scenarios;
  manifest["n_reduced"] = opts.reduce_to;
  manifest["mode"] = opts.mode == RunMode::PerScenario ? "per-scenario" : "expected";
  manifest["out_dir"] = opts.out_dir.string();
  manifest["swarm_size"] = cfg.swarm_size;
  manifest["iterations"] = cfg.iterations;
  manifest["penalty_weight"] = cfg.penalty_weight;
  manifest["timings_ms"] = {{"generate", gen_ms},
                            {"reduce", reduce_ms},
                            {"optimize", optimize_ms},
                            {"total", ms_since(t_total)}};
  std::ofstream out(opts.out_dir / "manifest.json", std::ios::binary);
  if (!out) throw SpecError("cannot write manifest.json");
  out << manifest.dump(2) << "\n";
  res.artifacts.push_back(opts.out_dir / "manifest.json");
  return res;
}

}  // namespace gridsched
