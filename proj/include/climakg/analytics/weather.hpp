#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "climakg/ca/records.hpp"

namespace climakg::analytics {

struct DayWeatherInput {
  Date date{};
  bool rain_flag = false;   // WT16
  bool snow_flag = false;   // WT18
  bool fog_flag = false;    // WT01 or WT02
  bool haze_flag = false;   // WT08
  std::optional<double> precipitation;  // mm
  std::optional<double> temperature;    // degrees C
};

enum class WeatherLabel { kRain, kSnow, kFog, kDrizzle, kSun };

std::string_view LabelName(WeatherLabel label);
const std::vector<WeatherLabel>& AllLabels();

struct ClassifierConfig {
  // Snow needs temperature <= this.
  double snow_threshold = 0.0;
};

// First matching rule wins: Rain, Snow, Fog, Drizzle, otherwise Sun. Absent
// numeric fields count as 0.
WeatherLabel ClassifyDay(const DayWeatherInput& day, const ClassifierConfig& config = {});

struct DistributionEntry {
  int day_of_year = 0;
  WeatherLabel label = WeatherLabel::kSun;
  bool has_data = false;  // false: no input for the day, defaulted to Sun
};

struct DistributionSeries {
  int year = 0;
  std::vector<DistributionEntry> entries;  // ascending day_of_year
};

// One series per requested year (in the given order) with an entry for every
// day of that year. Throws EmptyInput when years is empty.
std::vector<DistributionSeries> WeatherDistribution(const std::vector<DayWeatherInput>& days,
                                                    const std::vector<int>& years,
                                                    const ClassifierConfig& config = {});

// Folds observation records of one station into per-day inputs, sorted by
// date. Temperature is TAVG, else the mean of TMAX and TMIN.
std::vector<DayWeatherInput> BuildDayInputs(const std::vector<ca::ObservationRecord>& obs,
                                            const std::string& station_id);

}  // namespace climakg::analytics
