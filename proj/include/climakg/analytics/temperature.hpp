#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "climakg/ca/records.hpp"

namespace climakg::analytics {

struct YearRange {
  int first = 0;
  int last = 0;  // inclusive
  bool Contains(int year) const { return year >= first && year <= last; }
};

struct MonthlyBoxStats {
  unsigned month = 0;  // 1..12
  std::size_t n = 0;
  double minimum = 0;
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  double maximum = 0;
  double lower_fence = 0;
  double upper_fence = 0;
  std::size_t outlier_count = 0;
  double mean = 0;
  // Most extreme samples still inside the fences.
  double whisker_low = 0;
  double whisker_high = 0;
  // Days whose temperature came from (TMAX + TMIN) / 2 instead of TAVG.
  std::size_t fallback_days = 0;
};

struct DailyTemperature {
  Date date;
  double celsius = 0;
  bool from_fallback = false;
};

// One value per day for the station: TAVG, else the mean of TMAX and TMIN when
// both exist. Sorted by date.
std::vector<DailyTemperature> DailyTemperatures(const std::vector<ca::ObservationRecord>& obs,
                                                const std::string& station_id,
                                                const YearRange& years);

// Box statistics for a non-empty sample of one month. Throws EmptyInput.
MonthlyBoxStats ComputeBoxStats(unsigned month, const std::vector<double>& values);

// Groups daily temperatures by calendar month across the year range. Months
// without samples are left out (with a warning); throws NoData when nothing
// qualifies at all.
std::vector<MonthlyBoxStats> MonthlyTemperatureStats(
    const std::vector<ca::ObservationRecord>& observations, const std::string& station_id,
    const YearRange& years);

}  // namespace climakg::analytics
