#pragma once

#include <vector>

#include "gridsched/parallel.hpp"
#include "gridsched/stochastics.hpp"

namespace gridsched {

enum class DistanceMetric { L1, L2 };

// Symmetric pairwise scenario-distance matrix, zero diagonal.
struct CostMatrix {
  int n = 0;
  std::vector<double> values;  // row-major n*n

  double at(int i, int j) const { return values[static_cast<size_t>(i) * n + j]; }
  double& at(int i, int j) { return values[static_cast<size_t>(i) * n + j]; }
};

struct ReductionResult {
  std::vector<int> selected;            // original indices, in selection order
  std::vector<int> deleted;             // original indices, ascending
  std::vector<double> new_probability;  // aligned with selected
  std::vector<int> assigned_to;         // aligned with deleted: nearest selected index
};

// Distance between the concatenated hourly (wind, pv, load) vectors.
CostMatrix cost_matrix(const ScenarioSet& set, DistanceMetric metric = DistanceMetric::L1,
                       ExecPolicy policy = ExecPolicy::Parallel);

// Greedy fast-forward selection. Each pick minimizes the probability-weighted
// distance sum over the not-yet-selected scenarios; after a pick, every
// remaining row is floored at its distance to the pick. Ties go to the lowest
// index. Deleted mass moves to the nearest selected scenario by original
// distance.
ReductionResult fast_forward(const ScenarioSet& set, const CostMatrix& nu, int target);
ReductionResult fast_forward(const ScenarioSet& set, int target,
                             DistanceMetric metric = DistanceMetric::L1,
                             ExecPolicy policy = ExecPolicy::Parallel);

// Materializes the reduced set (selection order) with redistributed weights.
ScenarioSet redistribute(const ScenarioSet& set, const ReductionResult& result);

}  // namespace gridsched
