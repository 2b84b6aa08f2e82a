#include "gridsched/spec_io.hpp"

#include <fstream>
#include <string>

using nlohmann::json;

namespace gridsched {

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SpecError(path + ": expected object");
  auto it = j.find(key);
  if (it == j.end()) throw SpecError(path + "." + key + ": missing field");
  return *it;
}

double num(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number()) throw SpecError(path + "." + key + ": expected number");
  return v.get<double>();
}

double num_or(const json& j, const char* key, const std::string& path, double fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return num(j, key, path);
}

int integer(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer()) throw SpecError(path + "." + key + ": expected integer");
  return v.get<int>();
}

int integer_or(const json& j, const char* key, const std::string& path, int fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return integer(j, key, path);
}

std::string text_or(const json& j, const char* key, const std::string& path,
                    const std::string& fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_string()) throw SpecError(path + "." + key + ": expected string");
  return v.get<std::string>();
}

std::vector<double> num_list(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_array()) throw SpecError(path + "." + key + ": expected array");
  std::vector<double> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number())
      throw SpecError(path + "." + key + "[" + std::to_string(i) + "]: expected number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

const json& list(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_array()) throw SpecError(path + "." + key + ": expected array");
  return v;
}

}  // namespace

MicrogridSpec spec_from_json(const json& doc) {
  MicrogridSpec spec;
  const std::string root = "spec";
  spec.name = text_or(doc, "name", root, "");
  spec.horizon = integer(doc, "horizon", root);

  if (doc.contains("generators")) {
    const json& gens = list(doc, "generators", root);
    for (size_t i = 0; i < gens.size(); ++i) {
      const std::string p = "generators[" + std::to_string(i) + "]";
      const json& g = gens[i];
      Generator out;
      out.name = text_or(g, "name", p, "G" + std::to_string(i + 1));
      out.p_min = num(g, "p_min", p);
      out.p_max = num(g, "p_max", p);
      out.cost_a = num(g, "cost_a", p);
      out.cost_b = num(g, "cost_b", p);
      out.cost_c = num(g, "cost_c", p);
      out.startup_cost = num_or(g, "startup_cost", p, 0.0);
      out.shutdown_cost = num_or(g, "shutdown_cost", p, 0.0);
      out.min_up_time = integer_or(g, "min_up_time", p, 1);
      out.min_down_time = integer_or(g, "min_down_time", p, 1);
      out.ramp_up = num_or(g, "ramp_up", p, out.p_max);
      out.ramp_down = num_or(g, "ramp_down", p, out.p_max);
      out.emission_factor = num_or(g, "emission_factor", p, 0.0);
      out.emission_price = num_or(g, "emission_price", p, 0.0);
      spec.generators.push_back(out);
    }
  }

  if (doc.contains("storages")) {
    const json& units = list(doc, "storages", root);
    for (size_t i = 0; i < units.size(); ++i) {
      const std::string p = "storages[" + std::to_string(i) + "]";
      const json& u = units[i];
      StorageUnit out;
      out.name = text_or(u, "name", p, "ESS" + std::to_string(i + 1));
      out.charge_min = num_or(u, "charge_min", p, 0.0);
      out.charge_max = num(u, "charge_max", p);
      out.discharge_min = num_or(u, "discharge_min", p, 0.0);
      out.discharge_max = num(u, "discharge_max", p);
      out.capacity = num(u, "capacity", p);
      out.soc_max = num_or(u, "soc_max", p, out.capacity);
      out.min_charge_time = integer_or(u, "min_charge_time", p, 0);
      out.min_discharge_time = integer_or(u, "min_discharge_time", p, 0);
      out.charge_efficiency = num_or(u, "charge_efficiency", p, 1.0);
      out.discharge_efficiency = num_or(u, "discharge_efficiency", p, 1.0);
      spec.storages.push_back(out);
    }
  }

  if (doc.contains("wind_units")) {
    const json& units = list(doc, "wind_units", root);
    for (size_t i = 0; i < units.size(); ++i) {
      const std::string p = "wind_units[" + std::to_string(i) + "]";
      const json& u = units[i];
      WindUnit out;
      out.name = text_or(u, "name", p, "WT" + std::to_string(i + 1));
      out.v_cut_in = num(u, "v_cut_in", p);
      out.v_rated = num(u, "v_rated", p);
      out.v_cut_out = num(u, "v_cut_out", p);
      out.p_rated = num(u, "p_rated", p);
      out.k1 = num(u, "k1", p);
      out.k2 = num(u, "k2", p);
      out.k3 = num(u, "k3", p);
      spec.wind_units.push_back(out);
    }
  }

  if (doc.contains("pv_units")) {
    const json& units = list(doc, "pv_units", root);
    for (size_t i = 0; i < units.size(); ++i) {
      const std::string p = "pv_units[" + std::to_string(i) + "]";
      const json& u = units[i];
      PvUnit out;
      out.name = text_or(u, "name", p, "PV" + std::to_string(i + 1));
      out.p_stc = num(u, "p_stc", p);
      out.g_stc = num(u, "g_stc", p);
      out.t_cell = num(u, "t_cell", p);
      out.k_temp = num(u, "k_temp", p);
      spec.pv_units.push_back(out);
    }
  }

  const json& prices = field(doc, "prices", root);
  spec.prices.market = num_list(prices, "market", "prices");
  spec.prices.exchange = num_list(prices, "exchange", "prices");

  spec.grid_min = num(doc, "grid_min", root);
  spec.grid_max = num(doc, "grid_max", root);

  if (doc.contains("loss_profile"))
    spec.loss_profile = num_list(doc, "loss_profile", root);
  else
    spec.loss_profile.assign(spec.horizon > 0 ? spec.horizon : 0, 0.0);

  validate(spec);
  return spec;
}

json spec_to_json(const MicrogridSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["horizon"] = spec.horizon;
  doc["generators"] = json::array();
  for (const Generator& g : spec.generators)
    doc["generators"].push_back({{"name", g.name},
                                 {"p_min", g.p_min},
                                 {"p_max", g.p_max},
                                 {"cost_a", g.cost_a},
                                 {"cost_b", g.cost_b},
                                 {"cost_c", g.cost_c},
                                 {"startup_cost", g.startup_cost},
                                 {"shutdown_cost", g.shutdown_cost},
                                 {"min_up_time", g.min_up_time},
                                 {"min_down_time", g.min_down_time},
                                 {"ramp_up", g.ramp_up},
                                 {"ramp_down", g.ramp_down},
                                 {"emission_factor", g.emission_factor},
                                 {"emission_price", g.emission_price}});
  doc["storages"] = json::array();
  for (const StorageUnit& u : spec.storages)
    doc["storages"].push_back({{"name", u.name},
                               {"charge_min", u.charge_min},
                               {"charge_max", u.charge_max},
                               {"discharge_min", u.discharge_min},
                               {"discharge_max", u.discharge_max},
                               {"capacity", u.capacity},
                               {"soc_max", u.soc_max},
                               {"min_charge_time", u.min_charge_time},
                               {"min_discharge_time", u.min_discharge_time},
                               {"charge_efficiency", u.charge_efficiency},
                               {"discharge_efficiency", u.discharge_efficiency}});
  doc["wind_units"] = json::array();
  for (const WindUnit& u : spec.wind_units)
    doc["wind_units"].push_back({{"name", u.name},
                                 {"v_cut_in", u.v_cut_in},
                                 {"v_rated", u.v_rated},
                                 {"v_cut_out", u.v_cut_out},
                                 {"p_rated", u.p_rated},
                                 {"k1", u.k1},
                                 {"k2", u.k2},
                                 {"k3", u.k3}});
  doc["pv_units"] = json::array();
  for (const PvUnit& u : spec.pv_units)
    doc["pv_units"].push_back({{"name", u.name},
                               {"p_stc", u.p_stc},
                               {"g_stc", u.g_stc},
                               {"t_cell", u.t_cell},
                               {"k_temp", u.k_temp}});
  doc["prices"] = {{"market", spec.prices.market}, {"exchange", spec.prices.exchange}};
  doc["grid_min"] = spec.grid_min;
  doc["grid_max"] = spec.grid_max;
  doc["loss_profile"] = spec.loss_profile;
  return doc;
}

ForecastProfile forecasts_from_json(const json& doc) {
  ForecastProfile f;
  const std::string p = "forecasts";
  f.wind_mean = num_list(doc, "wind_mean", p);
  f.wind_std = num_list(doc, "wind_std", p);
  f.irradiance_mean = num_list(doc, "irradiance_mean", p);
  f.irradiance_std = num_list(doc, "irradiance_std", p);
  f.temperature_mean = num_list(doc, "temperature_mean", p);
  f.temperature_std = num_list(doc, "temperature_std", p);
  f.load_mean = num_list(doc, "load_mean", p);
  f.load_std = num_list(doc, "load_std", p);
  return f;
}

json forecasts_to_json(const ForecastProfile& f) {
  return {{"wind_mean", f.wind_mean},
          {"wind_std", f.wind_std},
          {"irradiance_mean", f.irradiance_mean},
          {"irradiance_std", f.irradiance_std},
          {"temperature_mean", f.temperature_mean},
          {"temperature_std", f.temperature_std},
          {"load_mean", f.load_mean},
          {"load_std", f.load_std}};
}

namespace {

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open config file: " + path.string());
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw SpecError("malformed JSON in " + path.string());
  return doc;
}

}  // namespace

MicrogridSpec load_spec(const std::filesystem::path& path) {
  return spec_from_json(parse_file(path));
}

CaseFile load_case(const std::filesystem::path& path) {
  const json doc = parse_file(path);
  CaseFile c;
  c.spec = spec_from_json(doc);
  c.forecasts = forecasts_from_json(field(doc, "forecasts", "spec"));
  validate(c.forecasts, c.spec.horizon);
  return c;
}

void save_case(const std::filesystem::path& path, const CaseFile& c) {
  json doc = spec_to_json(c.spec);
  doc["forecasts"] = forecasts_to_json(c.forecasts);
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write config file: " + path.string());
  out << doc.dump(2) << "\n";
}

}  // namespace gridsched
