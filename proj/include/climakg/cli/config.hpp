#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "climakg/analytics/temperature.hpp"
#include "climakg/noaa/units.hpp"

namespace climakg::cli {

inline constexpr const char* kTokenEnvVar = "NOAA_TOKEN";

// Settings shared by the subcommands. Explicit flags win over values from the
// config file, which win over these defaults.
struct CliConfig {
  std::filesystem::path data_dir = ".";
  std::string base_iri = std::string(ca::kDefaultBase);
  noaa::UnitRegime units = noaa::UnitRegime::kMetric;
  std::string token;  // value of the token reference (flag or NOAA_TOKEN)
  std::optional<std::filesystem::path> fixture_dir;
  std::filesystem::path output_dir = ".";

  // Throws UnknownRegime / Error when a value cannot be used.
  void Validate() const;
};

// key=value lines; '#' and ';' start comments, [section] headers are
// ignored. Throws Error on malformed lines or unreadable files.
std::map<std::string, std::string> ParseConfigText(std::string_view text);
std::map<std::string, std::string> LoadConfigFile(const std::filesystem::path& path);

// Year lists: "1980-2019", "1951,1955,1959,1963" or a mix such as
// "1951,1960-1962". Result is sorted and unique. Throws Error.
std::vector<int> ParseYears(std::string_view text);
analytics::YearRange SpanOf(const std::vector<int>& years);

}  // namespace climakg::cli
