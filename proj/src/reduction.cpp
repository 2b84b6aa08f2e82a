#include "gridsched/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gridsched {

namespace {

double distance(const Scenario& a, const Scenario& b, DistanceMetric metric) {
  const size_t T = a.wind_power.size();
  double acc = 0.0;
  auto add = [&](const std::vector<double>& x, const std::vector<double>& y) {
    for (size_t t = 0; t < T; ++t) {
      const double d = x[t] - y[t];
      acc += metric == DistanceMetric::L1 ? std::abs(d) : d * d;
    }
  };
  add(a.wind_power, b.wind_power);
  add(a.pv_power, b.pv_power);
  add(a.load, b.load);
  return metric == DistanceMetric::L1 ? acc : std::sqrt(acc);
}

}  // namespace

CostMatrix cost_matrix(const ScenarioSet& set, DistanceMetric metric, ExecPolicy policy) {
  const int n = set.size();
  if (n < 2) throw SpecError("cost_matrix: need at least 2 scenarios");
  CostMatrix m;
  m.n = n;
  m.values.assign(static_cast<size_t>(n) * n, 0.0);

  auto fill_row = [&](int i) {
    for (int j = i + 1; j < n; ++j)
      m.at(i, j) = distance(set.scenarios[i], set.scenarios[j], metric);
  };
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for num_threads(effective_threads()) schedule(static)
    for (int i = 0; i < n; ++i) fill_row(i);
  } else {
    for (int i = 0; i < n; ++i) fill_row(i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.at(j, i) = m.at(i, j);
  return m;
}

ReductionResult fast_forward(const ScenarioSet& set, const CostMatrix& nu, int target) {
  const int n = set.size();
  if (target < 1 || target > n) throw SpecError("fast_forward: target must be in [1, n]");
  if (nu.n != n) throw SpecError("fast_forward: cost matrix does not match scenario set");

  std::vector<double> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = set.scenarios[i].probability;

  ReductionResult res;
  std::vector<char> picked(n, 0);
  std::vector<double> work(nu.values);  // updated in place as picks accumulate

  for (int it = 0; it < target; ++it) {
    if (it > 0) {
      const int last = res.selected.back();
      for (int w = 0; w < n; ++w) {
        if (picked[w]) continue;
        double* row = &work[static_cast<size_t>(w) * n];
        const double to_last = row[last];
        for (int j = 0; j < n; ++j) row[j] = std::min(row[j], to_last);
      }
    }
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int w = 0; w < n; ++w) {
      if (picked[w]) continue;
      const double* row = &work[static_cast<size_t>(w) * n];
      double d = 0.0;
      for (int j = 0; j < n; ++j)
        if (!picked[j] && j != w) d += pi[j] * row[j];
      if (d < best_d) {
        best_d = d;
        best = w;
      }
    }
    picked[best] = 1;
    res.selected.push_back(best);
  }

  for (int w = 0; w < n; ++w)
    if (!picked[w]) res.deleted.push_back(w);

  std::vector<int> sel_pos(n, -1);
  res.new_probability.resize(res.selected.size());
  for (size_t k = 0; k < res.selected.size(); ++k) {
    sel_pos[res.selected[k]] = static_cast<int>(k);
    res.new_probability[k] = pi[res.selected[k]];
  }
  // Unreduced distances decide where deleted mass lands.
  res.assigned_to.resize(res.deleted.size());
  for (size_t di = 0; di < res.deleted.size(); ++di) {
    const int w = res.deleted[di];
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int s : res.selected) {
      const double d = nu.at(s, w);
      if (d < best_d || (d == best_d && s < best)) {
        best_d = d;
        best = s;
      }
    }
    res.assigned_to[di] = best;
    res.new_probability[sel_pos[best]] += pi[w];
  }
  return res;
}

ReductionResult fast_forward(const ScenarioSet& set, int target, DistanceMetric metric,
                             ExecPolicy policy) {
  const int n = set.size();
  if (target < 1 || target > n) throw SpecError("fast_forward: target must be in [1, n]");
  if (n == 1) {
    ReductionResult res;
    res.selected = {0};
    res.new_probability = {set.scenarios[0].probability};
    return res;
  }
  return fast_forward(set, cost_matrix(set, metric, policy), target);
}

ScenarioSet redistribute(const ScenarioSet& set, const ReductionResult& result) {
  const size_t n = set.scenarios.size();
  if (result.selected.size() + result.deleted.size() != n ||
      result.new_probability.size() != result.selected.size() ||
      result.assigned_to.size() != result.deleted.size())
    throw SpecError("redistribute: result does not match scenario set");
  std::vector<char> seen(n, 0);
  auto mark = [&](int i) {
    if (i < 0 || static_cast<size_t>(i) >= n || seen[i])
      throw SpecError("redistribute: result does not match scenario set");
    seen[i] = 1;
  };
  for (int i : result.selected) mark(i);
  for (int i : result.deleted) mark(i);

  ScenarioSet out;
  out.scenarios.reserve(result.selected.size());
  for (size_t k = 0; k < result.selected.size(); ++k) {
    Scenario sc = set.scenarios[result.selected[k]];
    sc.probability = result.new_probability[k];
    out.scenarios.push_back(std::move(sc));
  }
  return out;
}

}  // namespace gridsched
