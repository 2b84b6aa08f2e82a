// Timing comparison between the serial reference paths and the OpenMP ones.
#include <chrono>
#include <cstdio>

#include "gridsched/optimizer.hpp"
#include "gridsched/parallel.hpp"
#include "gridsched/pipeline.hpp"
#include "gridsched/reduction.hpp"
#include "gridsched/spec_io.hpp"
#include "gridsched/stochastics.hpp"

using namespace gridsched;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  const CaseFile c = load_case(std::string(GRIDSCHED_DATA_DIR) + "/case33.json");
  const int n = 1000;
  const uint64_t seed = 7;

  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "openmp ms", "speedup");

  ScenarioSet set;
  const double gen_serial = time_ms(
      [&] { set = generate_scenarios(c.spec, c.forecasts, n, seed, ExecPolicy::Serial); });
  ScenarioSet set_par;
  const double gen_par = time_ms(
      [&] { set_par = generate_scenarios(c.spec, c.forecasts, n, seed, ExecPolicy::Parallel); });
  std::printf("%-28s %10.1f %10.1f %7.2fx%s\n", "generate_scenarios(1000)", gen_serial, gen_par,
              gen_serial / gen_par, set == set_par ? "" : "  MISMATCH");

  CostMatrix m;
  const double cm_serial =
      time_ms([&] { m = cost_matrix(set, DistanceMetric::L1, ExecPolicy::Serial); });
  CostMatrix m_par;
  const double cm_par =
      time_ms([&] { m_par = cost_matrix(set, DistanceMetric::L1, ExecPolicy::Parallel); });
  std::printf("%-28s %10.1f %10.1f %7.2fx%s\n", "cost_matrix(1000x1000)", cm_serial, cm_par,
              cm_serial / cm_par, m.values == m_par.values ? "" : "  MISMATCH");

  const ReductionResult red = fast_forward(set, m, 10);
  const ScenarioSet reduced = redistribute(set, red);
  PsoConfig cfg;
  cfg.iterations = 100;
  cfg.seed = seed;

  set_thread_cap(1);
  OptimizeResult r1;
  const double opt_serial = time_ms([&] { r1 = optimize(c.spec, reduced, cfg); });
  set_thread_cap(0);
  OptimizeResult rn;
  const double opt_par = time_ms([&] { rn = optimize(c.spec, reduced, cfg); });
  std::printf("%-28s %10.1f %10.1f %7.2fx%s\n", "optimize(100 iters)", opt_serial, opt_par,
              opt_serial / opt_par, r1.best_fitness == rn.best_fitness ? "" : "  MISMATCH");
  return 0;
}
