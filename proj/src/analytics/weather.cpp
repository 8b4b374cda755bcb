#include "climakg/analytics/weather.hpp"

#include <map>

#include "climakg/errors.hpp"

namespace climakg::analytics {

std::string_view LabelName(WeatherLabel label) {
  switch (label) {
    case WeatherLabel::kRain:
      return "Rain";
    case WeatherLabel::kSnow:
      return "Snow";
    case WeatherLabel::kFog:
      return "Fog";
    case WeatherLabel::kDrizzle:
      return "Drizzle";
    case WeatherLabel::kSun:
      return "Sun";
  }
  return "Sun";
}

const std::vector<WeatherLabel>& AllLabels() {
  static const std::vector<WeatherLabel> labels{WeatherLabel::kRain, WeatherLabel::kSnow,
                                                WeatherLabel::kFog, WeatherLabel::kDrizzle,
                                                WeatherLabel::kSun};
  return labels;
}

WeatherLabel ClassifyDay(const DayWeatherInput& day, const ClassifierConfig& config) {
  const double prcp = day.precipitation.value_or(0.0);
  const double temp = day.temperature.value_or(0.0);
  if (day.rain_flag && prcp > 0 && temp > 0) return WeatherLabel::kRain;
  if (day.snow_flag && prcp > 0 && temp <= config.snow_threshold) return WeatherLabel::kSnow;
  if (day.fog_flag) return WeatherLabel::kFog;
  if (day.haze_flag) return WeatherLabel::kDrizzle;
  return WeatherLabel::kSun;
}

std::vector<DistributionSeries> WeatherDistribution(const std::vector<DayWeatherInput>& days,
                                                    const std::vector<int>& years,
                                                    const ClassifierConfig& config) {
  if (years.empty()) throw EmptyInput("weather distribution needs at least one year");
  std::map<std::chrono::sys_days, const DayWeatherInput*> by_day;
  for (const auto& d : days) by_day.emplace(std::chrono::sys_days(d.date), &d);

  std::vector<DistributionSeries> out;
  for (int year : years) {
    DistributionSeries series{year, {}};
    const int n = DaysInYear(year);
    series.entries.reserve(n);
    for (int doy = 1; doy <= n; ++doy) {
      auto it = by_day.find(std::chrono::sys_days(DateFromDayOfYear(year, doy)));
      if (it == by_day.end()) {
        series.entries.push_back({doy, WeatherLabel::kSun, false});
      } else {
        series.entries.push_back({doy, ClassifyDay(*it->second, config), true});
      }
    }
    out.push_back(std::move(series));
  }
  return out;
}

std::vector<DayWeatherInput> BuildDayInputs(const std::vector<ca::ObservationRecord>& obs,
                                            const std::string& station_id) {
  struct Acc {
    DayWeatherInput in;
    std::optional<double> tavg, tmax, tmin;
  };
  std::map<std::chrono::sys_days, Acc> days;
  for (const auto& r : obs) {
    if (r.station_id != station_id) continue;
    Acc& a = days[std::chrono::sys_days(r.date)];
    a.in.date = r.date;
    if (const bool* flag = std::get_if<bool>(&r.value)) {
      switch (r.code) {
        case ca::DatatypeCode::kWt16:
          a.in.rain_flag = a.in.rain_flag || *flag;
          break;
        case ca::DatatypeCode::kWt18:
          a.in.snow_flag = a.in.snow_flag || *flag;
          break;
        case ca::DatatypeCode::kWt01:
        case ca::DatatypeCode::kWt02:
          a.in.fog_flag = a.in.fog_flag || *flag;
          break;
        case ca::DatatypeCode::kWt08:
          a.in.haze_flag = a.in.haze_flag || *flag;
          break;
        default:
          break;
      }
      continue;
    }
    const double v = std::get<double>(r.value);
    switch (r.code) {
      case ca::DatatypeCode::kPrcp:
        if (!a.in.precipitation) a.in.precipitation = v;
        break;
      case ca::DatatypeCode::kTavg:
        if (!a.tavg) a.tavg = v;
        break;
      case ca::DatatypeCode::kTmax:
        if (!a.tmax) a.tmax = v;
        break;
      case ca::DatatypeCode::kTmin:
        if (!a.tmin) a.tmin = v;
        break;
      default:
        break;
    }
  }
  std::vector<DayWeatherInput> out;
  out.reserve(days.size());
  for (auto& [day, a] : days) {
    if (a.tavg) {
      a.in.temperature = a.tavg;
    } else if (a.tmax && a.tmin) {
      a.in.temperature = (*a.tmax + *a.tmin) / 2.0;
    }
    out.push_back(a.in);
  }
  return out;
}

}  // namespace climakg::analytics
