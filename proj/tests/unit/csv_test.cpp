#include <gtest/gtest.h>

#include <json.hpp>
#include <map>

#include "climakg/errors.hpp"
#include "climakg/noaa/csv.hpp"
#include "oracles.hpp"

using namespace climakg;
namespace ct = climakg::testing;
using ca::DatatypeCode;

namespace {

const char* kHeader = "STATION,NAME,LATITUDE,LONGITUDE,ELEVATION,DATE,PRCP,TAVG,TMAX,WT08\n";

std::size_t CountCells(const std::string& text, const std::vector<std::string>& columns) {
  // Direct enumeration: split on newlines and commas outside quotes.
  const auto records = noaa::ReadCsvRecords(text);
  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < records[0].size(); ++j) index[records[0][j]] = j;
  std::size_t n = 0;
  for (std::size_t r = 1; r < records.size(); ++r) {
    for (const auto& c : columns) {
      const std::string& cell = records[r][index.at(c)];
      if (!cell.empty() && cell != "-9999") ++n;
    }
  }
  return n;
}

}  // namespace

TEST(Csv, RecordReader) {
  const auto rows = noaa::ReadCsvRecords("a,b,c\r\n\"x,1\",\"say \"\"hi\"\"\",\n\"multi\nline\",2,3");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"x,1", "say \"hi\"", ""}));
  EXPECT_EQ(rows[2][0], "multi\nline");
  EXPECT_THROW(noaa::ReadCsvRecords("a,b\n\"open,1\n"), CsvSyntaxError);
  EXPECT_THROW(noaa::ReadCsvRecords("a,b\nx\"y,1\n"), CsvSyntaxError);
}

TEST(Csv, TenRowsTwentyObservations) {
  std::string text = kHeader;
  for (int d = 1; d <= 10; ++d) {
    text += "EI000003969,\"DUBLIN AIRPORT, EI\",53.428,-6.241,68.0,1990-01-" +
            std::string(d < 10 ? "0" : "") + std::to_string(d) + "," + std::to_string(d * 0.5) +
            "," + std::to_string(4 + d) + ",,\n";
  }
  const auto parsed = noaa::ParseCsv(text);
  ASSERT_EQ(parsed.stations.size(), 1u);
  EXPECT_EQ(parsed.stations[0].station_id, "GHCND:EI000003969");
  EXPECT_EQ(parsed.stations[0].name, "DUBLIN AIRPORT, EI");
  EXPECT_DOUBLE_EQ(parsed.stations[0].latitude, 53.428);
  EXPECT_EQ(parsed.observations.size(), CountCells(text, {"PRCP", "TAVG", "TMAX", "WT08"}));
  EXPECT_EQ(parsed.observations.size(), 20u);
}

TEST(Csv, MissingValuesAndFlags) {
  const std::string text = std::string(kHeader) +
                           "EI000003969,D,53.4,-6.2,68,1990-01-01,,-9999,7.5,1\n"
                           "EI000003969,D,53.4,-6.2,68,1990-01-02,0.0,,,\n";
  const auto parsed = noaa::ParseCsv(text);
  ASSERT_EQ(parsed.observations.size(), 3u);
  EXPECT_EQ(parsed.observations[0].code, DatatypeCode::kTmax);
  EXPECT_EQ(parsed.observations[1].code, DatatypeCode::kWt08);
  EXPECT_EQ(std::get<bool>(parsed.observations[1].value), true);
  EXPECT_EQ(parsed.observations[2].code, DatatypeCode::kPrcp);
  EXPECT_DOUBLE_EQ(std::get<double>(parsed.observations[2].value), 0.0);
}

TEST(Csv, ColumnsByNameNotPosition) {
  const auto a = noaa::ParseCsv("DATE,TAVG,STATION,LATITUDE,LONGITUDE\n1990-01-01,4.5,X1,1,2\n");
  ASSERT_EQ(a.observations.size(), 1u);
  EXPECT_EQ(a.observations[0].station_id, "GHCND:X1");
  EXPECT_EQ(noaa::ParseCsv("STATION,DATE,LATITUDE,LONGITUDE,ELEVATION\n").observations.size(), 0u);
}

TEST(Csv, Errors) {
  try {
    noaa::ParseCsv("STATION,NAME,LATITUDE,LONGITUDE,TAVG\nX,Y,1,2,3\n");
    FAIL();
  } catch (const MissingColumn& e) {
    EXPECT_EQ(e.column(), "DATE");
  }
  EXPECT_THROW(noaa::ParseCsv("DATE,TAVG\n1990-01-01,1\n"), MissingColumn);
  try {
    noaa::ParseCsv("STATION,DATE,LATITUDE,LONGITUDE,TAVG\nX,1990-01-01,1,2,3\nX,1990-13-01,1,2,3\n");
    FAIL();
  } catch (const CsvSyntaxError& e) {
    EXPECT_EQ(e.row(), 3u);
  }
  EXPECT_THROW(noaa::ParseCsv("STATION,DATE,LATITUDE,LONGITUDE,TAVG\nX,1990-01-01,1,2,warm\n"),
               CsvSyntaxError);
  EXPECT_THROW(noaa::ParseCsv("STATION,DATE,LATITUDE,LONGITUDE,WT16\nX,1990-01-01,1,2,yes\n"),
               CsvSyntaxError);
  EXPECT_THROW(noaa::ParseCsv("STATION,DATE,LATITUDE,LONGITUDE,TAVG\nX,1990-01-01,1,2\n"),
               CsvSyntaxError);
}

TEST(Csv, StationTable) {
  const auto stations = noaa::ParseStationCsv(
      ct::ReadFile(ct::SourcePath("fixtures/cdo/dublin_manston_1990/stations.csv")));
  ASSERT_EQ(stations.size(), 2u);
  EXPECT_EQ(stations[1].station_id, "GHCND:UKM00003797");
  EXPECT_THROW(noaa::ParseStationCsv("STATION,NAME,LATITUDE\nX,Y,1\n"), MissingColumn);
}

// Shipped CSV fixtures against the counts recorded next to them.
TEST(Csv, FixturesMatchManifests) {
  for (const char* name : {"dublin", "manston", "sculthorpe"}) {
    SCOPED_TRACE(name);
    const std::string text = ct::ReadFile(ct::SourcePath(std::string("fixtures/csv/") + name + ".csv"));
    const auto manifest = nlohmann::json::parse(
        ct::ReadFile(ct::SourcePath(std::string("fixtures/csv/") + name + ".manifest.json")));
    const auto parsed = noaa::ParseCsv(text);
    EXPECT_EQ(parsed.stations.size(), manifest["stations"].get<std::size_t>());
    EXPECT_EQ(parsed.stations[0].station_id, manifest["station"].get<std::string>());
    EXPECT_EQ(parsed.observations.size(), manifest["observations"].get<std::size_t>());
    EXPECT_EQ(noaa::ReadDailySummaries(text).size(), manifest["rows"].get<std::size_t>());
    std::map<std::string, std::size_t> per;
    for (const auto& o : parsed.observations) per[std::string(ca::CodeName(o.code))]++;
    for (const auto& [code, count] : manifest["per_datatype"].items()) {
      EXPECT_EQ(per[code], count.get<std::size_t>()) << code;
    }
  }
}

TEST(CsvProperties, LosslessForSupportedColumns) {
  const std::string text = ct::ReadFile(ct::SourcePath("fixtures/csv/sculthorpe.csv"));
  std::vector<std::string> columns;
  for (DatatypeCode c : ca::AllDatatypeCodes()) columns.emplace_back(ca::CodeName(c));
  EXPECT_EQ(noaa::ParseCsv(text).observations.size(), CountCells(text, columns));
}
