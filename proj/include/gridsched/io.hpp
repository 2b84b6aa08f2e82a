#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gridsched/domain.hpp"
#include "gridsched/reduction.hpp"
#include "gridsched/stochastics.hpp"

namespace gridsched {

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);
double parse_double(const std::string& s);

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Csv read_csv(const std::filesystem::path& path);

// Hour columns are 1-based (table convention); scenario ids are 0-based.
// When ids is given it relabels rows (reduced sets keep original ids).
void write_scenarios_csv(const std::filesystem::path& path, const ScenarioSet& set,
                         const std::vector<int>* ids = nullptr);
ScenarioSet read_scenarios_csv(const std::filesystem::path& path);

void write_schedule_csv(const std::filesystem::path& path, const MicrogridSpec& spec,
                        const Schedule& schedule);

// Dispatch + money columns per hour, plus a trailing totals row.
void write_ledger_csv(const std::filesystem::path& path, const MicrogridSpec& spec,
                      const Schedule& schedule, const DispatchLedger& ledger);

void write_profits_csv(const std::filesystem::path& path, const std::vector<int>& ids,
                       const std::vector<double>& probabilities,
                       const std::vector<double>& profits);

void write_convergence_csv(const std::filesystem::path& path, const std::vector<double>& trace);

void write_expected_profit(const std::filesystem::path& path, double value);

// Sidecar for a reduction: which scenarios survived and where mass went.
void write_reduction_report(const std::filesystem::path& path, const ReductionResult& result);

}  // namespace gridsched
