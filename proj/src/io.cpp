#include "gridsched/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gridsched {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw SpecError("not a number: '" + s + "'");
  return v;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // LF endings everywhere
  if (!out) throw SpecError("cannot write " + path.string());
  return out;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Csv read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot read " + path.string());
  Csv csv;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      csv.header = split_line(line);
      first = false;
    } else {
      csv.rows.push_back(split_line(line));
    }
  }
  return csv;
}

void write_scenarios_csv(const std::filesystem::path& path, const ScenarioSet& set,
                         const std::vector<int>* ids) {
  auto out = open_out(path);
  out << "scenario,hour,wind_kw,pv_kw,load_kw,probability\n";
  for (int s = 0; s < set.size(); ++s) {
    const Scenario& sc = set.scenarios[s];
    const int id = ids ? (*ids)[s] : s;
    const int T = static_cast<int>(sc.wind_power.size());
    for (int t = 0; t < T; ++t)
      out << id << ',' << (t + 1) << ',' << format_double(sc.wind_power[t]) << ','
          << format_double(sc.pv_power[t]) << ',' << format_double(sc.load[t]) << ','
          << format_double(sc.probability) << "\n";
  }
}

ScenarioSet read_scenarios_csv(const std::filesystem::path& path) {
  const Csv csv = read_csv(path);
  ScenarioSet set;
  int last_id = -1;
  for (const auto& row : csv.rows) {
    if (row.size() != 6) throw SpecError("bad scenario row in " + path.string());
    const int id = static_cast<int>(parse_double(row[0]));
    if (id != last_id) {
      set.scenarios.emplace_back();
      last_id = id;
    }
    Scenario& sc = set.scenarios.back();
    sc.wind_power.push_back(parse_double(row[2]));
    sc.pv_power.push_back(parse_double(row[3]));
    sc.load.push_back(parse_double(row[4]));
    sc.probability = parse_double(row[5]);
  }
  return set;
}

void write_schedule_csv(const std::filesystem::path& path, const MicrogridSpec& spec,
                        const Schedule& schedule) {
  auto out = open_out(path);
  out << "hour";
  for (size_t i = 0; i < spec.generators.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    out << ",g" << n << "_on,g" << n << "_kw";
  }
  for (size_t e = 0; e < spec.storages.size(); ++e) {
    const std::string n = std::to_string(e + 1);
    out << ",ess" << n << "_mode,ess" << n << "_kw,ess" << n << "_soc_kwh";
  }
  out << ",sell,grid_kw\n";
  for (int t = 0; t < schedule.horizon; ++t) {
    out << (t + 1);
    for (size_t i = 0; i < spec.generators.size(); ++i)
      out << ',' << static_cast<int>(schedule.gen_on[i][t]) << ','
          << format_double(schedule.gen_power[i][t]);
    for (size_t e = 0; e < spec.storages.size(); ++e)
      out << ',' << schedule.ess_mode(static_cast<int>(e), t) << ','
          << format_double(schedule.ess_power[e][t]) << ',' << format_double(schedule.soc[e][t]);
    out << ',' << static_cast<int>(schedule.sell[t]) << ','
        << format_double(schedule.grid_power[t]) << "\n";
  }
}

void write_ledger_csv(const std::filesystem::path& path, const MicrogridSpec& spec,
                      const Schedule& schedule, const DispatchLedger& ledger) {
  auto out = open_out(path);
  out << "hour";
  for (size_t i = 0; i < spec.generators.size(); ++i) out << ",g" << (i + 1) << "_kw";
  out << ",gen_cost,emission_cost,import_cost,revenue,profit\n";
  std::vector<double> dispatch_total(spec.generators.size(), 0.0);
  for (size_t t = 0; t < ledger.hours.size(); ++t) {
    const HourCosts& h = ledger.hours[t];
    out << (t + 1);
    for (size_t i = 0; i < spec.generators.size(); ++i) {
      const double p = schedule.gen_on[i][t] ? schedule.gen_power[i][t] : 0.0;
      dispatch_total[i] += p;
      out << ',' << format_double(p);
    }
    out << ',' << format_double(h.fuel + h.startup + h.shutdown) << ','
        << format_double(h.emission) << ',' << format_double(h.import_cost) << ','
        << format_double(h.revenue) << ',' << format_double(h.profit) << "\n";
  }
  const HourCosts& tot = ledger.total;
  out << "total";
  for (size_t i = 0; i < spec.generators.size(); ++i)
    out << ',' << format_double(dispatch_total[i]);
  out << ',' << format_double(tot.fuel + tot.startup + tot.shutdown) << ','
      << format_double(tot.emission) << ',' << format_double(tot.import_cost) << ','
      << format_double(tot.revenue) << ',' << format_double(tot.profit) << "\n";
}

void write_profits_csv(const std::filesystem::path& path, const std::vector<int>& ids,
                       const std::vector<double>& probabilities,
                       const std::vector<double>& profits) {
  auto out = open_out(path);
  out << "scenario,probability,profit\n";
  for (size_t i = 0; i < profits.size(); ++i)
    out << ids[i] << ',' << format_double(probabilities[i]) << ',' << format_double(profits[i])
        << "\n";
}

void write_convergence_csv(const std::filesystem::path& path, const std::vector<double>& trace) {
  auto out = open_out(path);
  out << "iteration,best_fitness\n";
  for (size_t k = 0; k < trace.size(); ++k)
    out << (k + 1) << ',' << format_double(trace[k]) << "\n";
}

void write_expected_profit(const std::filesystem::path& path, double value) {
  auto out = open_out(path);
  out << format_double(value) << "\n";
}

void write_reduction_report(const std::filesystem::path& path, const ReductionResult& result) {
  nlohmann::json doc;
  doc["selected"] = result.selected;
  doc["new_probability"] = result.new_probability;
  nlohmann::json assigned = nlohmann::json::array();
  for (size_t i = 0; i < result.deleted.size(); ++i)
    assigned.push_back({{"deleted", result.deleted[i]}, {"moved_to", result.assigned_to[i]}});
  doc["assigned"] = assigned;
  auto out = open_out(path);
  out << doc.dump(2) << "\n";
}

}  // namespace gridsched
