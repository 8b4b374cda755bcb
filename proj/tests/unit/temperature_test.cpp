#include <gtest/gtest.h>

#include <json.hpp>
#include <map>
#include <random>

#include "climakg/analytics/temperature.hpp"
#include "climakg/errors.hpp"
#include "climakg/log.hpp"
#include "climakg/noaa/csv.hpp"
#include "oracles.hpp"

using namespace climakg;
namespace ct = climakg::testing;
using analytics::YearRange;

namespace {

ca::ObservationRecord Obs(const std::string& station, const char* date, const char* code, double v) {
  return ca::MakeObservation(station, *ParseIsoDate(date), code, v);
}

class Temperature : public ::testing::Test {
 protected:
  void SetUp() override { previous_ = SetLogSink({}); }
  void TearDown() override { SetLogSink(previous_); }
  LogSink previous_;
};

}  // namespace

TEST_F(Temperature, DailyValuesPreferTavg) {
  const std::vector<ca::ObservationRecord> obs = {
      Obs("S", "1990-01-01", "TAVG", 4.0), Obs("S", "1990-01-01", "TMAX", 9.0),
      Obs("S", "1990-01-01", "TMIN", 1.0), Obs("S", "1990-01-02", "TMAX", 9.0),
      Obs("S", "1990-01-02", "TMIN", 2.0), Obs("S", "1990-01-03", "TMAX", 9.0),
      Obs("T", "1990-01-04", "TAVG", 7.0), Obs("S", "1991-01-01", "TAVG", 3.0)};
  const auto daily = analytics::DailyTemperatures(obs, "S", {1990, 1990});
  ASSERT_EQ(daily.size(), 2u);
  EXPECT_DOUBLE_EQ(daily[0].celsius, 4.0);
  EXPECT_FALSE(daily[0].from_fallback);
  EXPECT_DOUBLE_EQ(daily[1].celsius, 5.5);
  EXPECT_TRUE(daily[1].from_fallback);
}

TEST_F(Temperature, BoxStats) {
  const auto s = analytics::ComputeBoxStats(7, {1, 2, 3, 4, 100});
  EXPECT_EQ(s.month, 7u);
  EXPECT_EQ(s.n, 5u);
  EXPECT_DOUBLE_EQ(s.q1, 2);
  EXPECT_DOUBLE_EQ(s.median, 3);
  EXPECT_DOUBLE_EQ(s.q3, 4);
  EXPECT_DOUBLE_EQ(s.lower_fence, -1);
  EXPECT_DOUBLE_EQ(s.upper_fence, 7);
  EXPECT_EQ(s.outlier_count, 1u);
  EXPECT_DOUBLE_EQ(s.whisker_high, 4);
  EXPECT_DOUBLE_EQ(s.whisker_low, 1);
  EXPECT_DOUBLE_EQ(s.maximum, 100);
  EXPECT_DOUBLE_EQ(s.mean, 22);
  EXPECT_THROW(analytics::ComputeBoxStats(1, {}), EmptyInput);
}

TEST_F(Temperature, MissingMonthsAndNoData) {
  const std::vector<ca::ObservationRecord> obs = {Obs("S", "1990-03-01", "TAVG", 4.0),
                                                  Obs("S", "1990-05-01", "TAVG", 9.0)};
  const auto stats = analytics::MonthlyTemperatureStats(obs, "S", {1990, 1990});
  ASSERT_EQ(stats.size(), 2u);
  EXPECT_EQ(stats[0].month, 3u);
  EXPECT_EQ(stats[1].month, 5u);
  EXPECT_THROW(analytics::MonthlyTemperatureStats(obs, "S", {2000, 2001}), NoData);
  EXPECT_THROW(analytics::MonthlyTemperatureStats(obs, "OTHER", {1990, 1990}), NoData);
}

// Brute force: group by month, sort, interpolate.
TEST_F(Temperature, MonthlyStatsMatchBruteForce) {
  std::mt19937_64 rng(91);
  for (int round = 0; round < 20; ++round) {
    std::vector<ca::ObservationRecord> obs;
    std::map<std::pair<int, int>, double> tavg;  // (year, doy) -> value
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5000)(rng);
    for (std::size_t i = 0; i < n; ++i) {
      const int year = std::uniform_int_distribution<int>(1979, 1985)(rng);
      const int doy = std::uniform_int_distribution<int>(1, DaysInYear(year))(rng);
      const double v = std::uniform_int_distribution<int>(-150, 300)(rng) / 10.0;
      if (!tavg.emplace(std::make_pair(year, doy), v).second) continue;
      obs.push_back({"S", DateFromDayOfYear(year, doy), ca::DatatypeCode::kTavg, v});
    }
    const YearRange range{1980, 1984};
    std::map<unsigned, std::vector<double>> groups;
    for (const auto& [key, v] : tavg) {
      if (!range.Contains(key.first)) continue;
      groups[MonthOf(DateFromDayOfYear(key.first, key.second))].push_back(v);
    }
    if (groups.empty()) continue;
    const auto stats = analytics::MonthlyTemperatureStats(obs, "S", range);
    ASSERT_EQ(stats.size(), groups.size());
    for (const auto& s : stats) {
      const auto& g = groups.at(s.month);
      EXPECT_EQ(s.n, g.size());
      EXPECT_NEAR(s.q1, ct::BruteQuantile(g, 0.25), 1e-9);
      EXPECT_NEAR(s.median, ct::BruteQuantile(g, 0.5), 1e-9);
      EXPECT_NEAR(s.q3, ct::BruteQuantile(g, 0.75), 1e-9);
      EXPECT_NEAR(s.minimum, *std::min_element(g.begin(), g.end()), 1e-12);
      EXPECT_NEAR(s.maximum, *std::max_element(g.begin(), g.end()), 1e-12);
    }
  }
}

TEST_F(Temperature, FixtureMediansMatchManifest) {
  for (const char* name : {"dublin", "manston"}) {
    SCOPED_TRACE(name);
    const auto manifest = nlohmann::json::parse(
        ct::ReadFile(ct::SourcePath(std::string("fixtures/csv/") + name + ".manifest.json")));
    const auto parsed = noaa::ParseCsv(
        ct::ReadFile(ct::SourcePath(std::string("fixtures/csv/") + name + ".csv")));
    const auto stats = analytics::MonthlyTemperatureStats(
        parsed.observations, manifest["station"].get<std::string>(), {1980, 2019});
    ASSERT_EQ(stats.size(), 12u);
    for (const auto& s : stats) {
      EXPECT_NEAR(s.median, manifest["monthly_median"][std::to_string(s.month)].get<double>(), 1e-6)
          << "month " << s.month;
    }
  }
}
