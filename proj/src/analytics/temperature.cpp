#include "climakg/analytics/temperature.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "climakg/analytics/quantiles.hpp"
#include "climakg/errors.hpp"
#include "climakg/log.hpp"

namespace climakg::analytics {

namespace {

struct DayValues {
  std::optional<double> tavg, tmax, tmin;
};

void Keep(std::optional<double>& slot, double v) {
  if (!slot) slot = v;
}

}  // namespace

std::vector<DailyTemperature> DailyTemperatures(const std::vector<ca::ObservationRecord>& obs,
                                                const std::string& station_id,
                                                const YearRange& years) {
  std::map<std::chrono::sys_days, DayValues> days;
  for (const auto& r : obs) {
    if (r.station_id != station_id || !years.Contains(YearOf(r.date))) continue;
    const auto* v = std::get_if<double>(&r.value);
    if (v == nullptr) continue;
    DayValues& d = days[std::chrono::sys_days(r.date)];
    switch (r.code) {
      case ca::DatatypeCode::kTavg:
        Keep(d.tavg, *v);
        break;
      case ca::DatatypeCode::kTmax:
        Keep(d.tmax, *v);
        break;
      case ca::DatatypeCode::kTmin:
        Keep(d.tmin, *v);
        break;
      default:
        break;
    }
  }
  std::vector<DailyTemperature> out;
  for (const auto& [day, d] : days) {
    if (d.tavg) {
      out.push_back({Date(day), *d.tavg, false});
    } else if (d.tmax && d.tmin) {
      out.push_back({Date(day), (*d.tmax + *d.tmin) / 2.0, true});
    }
  }
  return out;
}

MonthlyBoxStats ComputeBoxStats(unsigned month, const std::vector<double>& values) {
  if (values.empty()) throw EmptyInput("box statistics of an empty sample");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());

  MonthlyBoxStats s;
  s.month = month;
  s.n = sorted.size();
  s.minimum = sorted.front();
  s.maximum = sorted.back();
  s.q1 = SortedQuantile(sorted, 0.25);
  s.median = SortedQuantile(sorted, 0.5);
  s.q3 = SortedQuantile(sorted, 0.75);
  const double iqr = s.q3 - s.q1;
  s.lower_fence = s.q1 - 1.5 * iqr;
  s.upper_fence = s.q3 + 1.5 * iqr;
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(s.n);
  s.whisker_low = s.q1;
  s.whisker_high = s.q3;
  for (double v : sorted) {
    if (v < s.lower_fence || v > s.upper_fence) {
      ++s.outlier_count;
      continue;
    }
    s.whisker_low = std::min(s.whisker_low, v);
    s.whisker_high = std::max(s.whisker_high, v);
  }
  return s;
}

std::vector<MonthlyBoxStats> MonthlyTemperatureStats(
    const std::vector<ca::ObservationRecord>& observations, const std::string& station_id,
    const YearRange& years) {
  const auto daily = DailyTemperatures(observations, station_id, years);
  if (daily.empty()) {
    throw NoData("no temperature observations for " + station_id + " in " +
                 std::to_string(years.first) + "-" + std::to_string(years.last));
  }
  std::array<std::vector<double>, 12> by_month;
  std::array<std::size_t, 12> fallback{};
  for (const auto& d : daily) {
    by_month[MonthOf(d.date) - 1].push_back(d.celsius);
    if (d.from_fallback) ++fallback[MonthOf(d.date) - 1];
  }
  std::vector<MonthlyBoxStats> out;
  for (unsigned m = 1; m <= 12; ++m) {
    if (by_month[m - 1].empty()) {
      LogWarning(station_id + ": no temperature samples for month " + std::to_string(m));
      continue;
    }
    MonthlyBoxStats s = ComputeBoxStats(m, by_month[m - 1]);
    s.fallback_days = fallback[m - 1];
    out.push_back(s);
  }
  return out;
}

}  // namespace climakg::analytics
