#include "gridsched/report.hpp"

#include <iomanip>
#include <sstream>

namespace gridsched {

namespace {

constexpr int kCol = 12;

void cell(std::ostringstream& out, const std::string& s) { out << std::setw(kCol) << s; }

std::string money(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

std::string kw(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << v;
  return s.str();
}

}  // namespace

std::string render_state_table(const MicrogridSpec& spec, const Schedule& schedule) {
  std::ostringstream out;
  cell(out, "hour");
  for (const Generator& g : spec.generators) cell(out, g.name);
  for (const StorageUnit& u : spec.storages) cell(out, u.name);
  out << "\n";
  for (int t = 0; t < schedule.horizon; ++t) {
    cell(out, std::to_string(t + 1));
    for (size_t i = 0; i < spec.generators.size(); ++i)
      cell(out, std::to_string(static_cast<int>(schedule.gen_on[i][t])));
    for (size_t e = 0; e < spec.storages.size(); ++e)
      cell(out, std::to_string(schedule.ess_mode(static_cast<int>(e), t)));
    out << "\n";
  }
  return out.str();
}

std::string render_ledger_table(const MicrogridSpec& spec, const Schedule& schedule,
                                const DispatchLedger& ledger) {
  std::ostringstream out;
  cell(out, "hour");
  for (const Generator& g : spec.generators) cell(out, g.name + " (kW)");
  cell(out, "gen cost");
  cell(out, "emission");
  cell(out, "import");
  cell(out, "revenue");
  cell(out, "profit");
  out << "\n";
  std::vector<double> dispatch_total(spec.generators.size(), 0.0);
  for (size_t t = 0; t < ledger.hours.size(); ++t) {
    const HourCosts& h = ledger.hours[t];
    cell(out, std::to_string(t + 1));
    for (size_t i = 0; i < spec.generators.size(); ++i) {
      const double p = schedule.gen_on[i][t] ? schedule.gen_power[i][t] : 0.0;
      dispatch_total[i] += p;
      cell(out, kw(p));
    }
    cell(out, money(h.fuel + h.startup + h.shutdown));
    cell(out, money(h.emission));
    cell(out, money(h.import_cost));
    cell(out, money(h.revenue));
    cell(out, money(h.profit));
    out << "\n";
  }
  if (!ledger.hours.empty()) {
    const HourCosts& tot = ledger.total;
    cell(out, "total");
    for (double p : dispatch_total) cell(out, kw(p));
    cell(out, money(tot.fuel + tot.startup + tot.shutdown));
    cell(out, money(tot.emission));
    cell(out, money(tot.import_cost));
    cell(out, money(tot.revenue));
    cell(out, money(tot.profit));
    out << "\n";
  }
  return out.str();
}

}  // namespace gridsched
