#pragma once

#include <string>
#include <vector>

#include "climakg/analytics/temperature.hpp"
#include "climakg/analytics/weather.hpp"

namespace climakg::analytics {

struct StationBoxStats {
  std::string station;
  std::vector<MonthlyBoxStats> months;
};

// station,month,n,min,q1,median,q3,max,lower_fence,upper_fence,outliers,mean
std::string EmitBoxStatsCsv(const std::vector<StationBoxStats>& stats);
// year,day_of_year,date,label
std::string EmitDistributionCsv(const std::vector<DistributionSeries>& series);

// Grouped box plot: one <rect class="box"> per month per station, tagged with
// data-station / data-month.
std::string EmitBoxPlotSvg(const std::vector<StationBoxStats>& stats,
                           const std::string& title = "Monthly temperature");
// Strip plot: x = day of year, one row per year, one <rect class="mark"> per
// day coloured by label.
std::string EmitStripPlotSvg(const std::vector<DistributionSeries>& series,
                             const std::string& title = "Distribution of days by weather type");

// All four throw EmptyInput when there is nothing to emit.

}  // namespace climakg::analytics
