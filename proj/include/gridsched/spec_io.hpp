#pragma once

#include <filesystem>

#include "gridsched/domain.hpp"
#include "gridsched/stochastics.hpp"

#include <json.hpp>

namespace gridsched {

// Everything a pipeline run needs from one config document.
struct CaseFile {
  MicrogridSpec spec;
  ForecastProfile forecasts;
};

MicrogridSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const MicrogridSpec& spec);

ForecastProfile forecasts_from_json(const nlohmann::json& doc);
nlohmann::json forecasts_to_json(const ForecastProfile& forecasts);

// Parse + validate. Errors carry the offending field path.
MicrogridSpec load_spec(const std::filesystem::path& path);
CaseFile load_case(const std::filesystem::path& path);
void save_case(const std::filesystem::path& path, const CaseFile& c);

}  // namespace gridsched
